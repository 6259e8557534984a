"""Pick the compiled kernels when available, else the numpy fallback.

Set ``ENTROPIC_COVER_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("ENTROPIC_COVER_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

count_crossings = _impl.count_crossings
track_logs = _impl.track_logs
entropy_cover_many = _impl.entropy_cover_many

__all__ = ["BACKEND", "count_crossings", "track_logs", "entropy_cover_many"]
