import pytest

from entropic_cover import _kernels, _pykernels

try:
    from entropic_cover import _ckernels
except ImportError:  # extension not built
    _ckernels = None

KERNEL_MODULES = {"python": _pykernels}
if _ckernels is not None:
    KERNEL_MODULES["cython"] = _ckernels

_KERNEL_NAMES = ("count_crossings", "track_logs", "entropy_cover_many")


@pytest.fixture(params=sorted(KERNEL_MODULES))
def backend(request, monkeypatch):
    """Run the test once per available kernel implementation."""
    mod = KERNEL_MODULES[request.param]
    for name in _KERNEL_NAMES:
        monkeypatch.setattr(_kernels, name, getattr(mod, name))
    return request.param
