"""The entropy function, its extension to the cover, and branch-tracked continuation."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from . import _kernels
from .cover import CoverPoint, CutPoint, PolyPath, Side, on_cut
from .errors import DomainError, StepResolutionError

__all__ = [
    "NEAR_PUNCTURE",
    "MAX_SAMPLES",
    "STEP_BOUND",
    "entropy_principal",
    "entropy_cover",
    "entropy_real_regulator",
    "entropy_cover_many",
    "log_branches",
    "continue_entropy",
]

NEAR_PUNCTURE = 1e-10
STEP_BOUND = math.pi / 2
MAX_SAMPLES = 2**20


def _as_cut_complex(z) -> complex:
    if isinstance(z, CoverPoint):
        z = z.base
    if isinstance(z, CutPoint):
        w = z.as_complex()
    else:
        w = complex(z)
    if abs(w) < NEAR_PUNCTURE or abs(1 - w) < NEAR_PUNCTURE:
        raise DomainError(f"{w} is within {NEAR_PUNCTURE:g} of a puncture")
    return w


def _one_minus(z: complex) -> complex:
    # keeps the signed zero of the imaginary part, so slit sides survive
    return complex(1.0 - z.real, -z.imag)


def entropy_principal(z) -> complex:
    """``-z Log z - (1-z) Log(1-z)`` with principal logarithms.

    ``z`` may be a number or a ``CutPoint``; on a slit the point's side picks
    the limiting value of ``Log``.
    """
    z = _as_cut_complex(z)
    w = _one_minus(z)
    return -z * cmath.log(z) - w * cmath.log(w)


def log_branches(pt: CoverPoint) -> tuple[complex, complex]:
    """The branches of ``log z`` and ``log(1 - z)`` at a point of the cover."""
    z = _as_cut_complex(pt.base)
    return (cmath.log(z) + 1j * math.pi * pt.p, cmath.log(_one_minus(z)) - 1j * math.pi * pt.q)


def entropy_cover(pt: CoverPoint) -> complex:
    """``Phi(z) - pi i p z + pi i q (1 - z)`` at ``(z; p, q)``."""
    z = _as_cut_complex(pt.base)
    return entropy_principal(z) - 1j * math.pi * pt.p * z + 1j * math.pi * pt.q * (1 - z)


def entropy_cover_many(z, p, q) -> np.ndarray:
    """Vectorised ``entropy_cover`` for arrays of off-slit points.

    Slit points must carry their side in the sign of a zero imaginary part.
    """
    z = np.asarray(z, dtype=np.complex128).ravel()
    p = np.ascontiguousarray(np.broadcast_to(np.asarray(p, dtype=np.int64), z.shape))
    q = np.ascontiguousarray(np.broadcast_to(np.asarray(q, dtype=np.int64), z.shape))
    if np.any(np.abs(z) < NEAR_PUNCTURE) or np.any(np.abs(1 - z) < NEAR_PUNCTURE):
        raise DomainError("argument within the near-puncture guard")
    return _kernels.entropy_cover_many(
        np.ascontiguousarray(z.real), np.ascontiguousarray(z.imag), p, q
    )


def _real_value(x) -> float:
    if isinstance(x, (int, float, Fraction)):
        return float(x)
    if hasattr(x, "imag") and x.imag == 0:
        return float(x.real)
    raise DomainError(f"the real regulator needs a real argument, got {x!r}")


def entropy_real_regulator(x) -> float:
    """``-x log|x| - (1-x) log|1-x|`` for real ``x`` off {0, 1}."""
    x = _real_value(x)
    if abs(x) < NEAR_PUNCTURE or abs(1 - x) < NEAR_PUNCTURE:
        raise DomainError(f"{x} is within {NEAR_PUNCTURE:g} of a puncture")
    return -x * math.log(abs(x)) - (1 - x) * math.log(abs(1 - x))


def continue_entropy(start: CoverPoint, path: PolyPath, steps: int = 16) -> complex:
    """Continue the entropy analytically along ``path`` from ``start``.

    Each segment is sampled at ``steps`` equal sub-steps; the logarithms of
    ``z`` and ``1 - z`` pick the branch nearest to the previous sample. A
    segment is resampled with twice as many sub-steps while some step moves
    either argument by ``STEP_BOUND`` or more, giving up past ``MAX_SAMPLES``.
    The result does not use the crossing counter, so it can serve as an
    independent check of ``continue_point``.
    """
    if steps < 1:
        raise DomainError("steps must be positive")
    z0 = complex(start.z)
    if z0 != path.start:
        raise DomainError("path does not start at the projection of the start point")
    if on_cut(z0) and path.start_side not in (Side.NONE, start.side):
        raise DomainError("path start side disagrees with the start point")
    log_z, log_w = log_branches(start)
    verts = path.vertices
    budget = MAX_SAMPLES
    for a, b in zip(verts, verts[1:]):
        if a == b:
            continue
        n = steps
        while True:
            t = np.linspace(0.0, 1.0, n + 1)
            re = a.real + (b.real - a.real) * t
            im = a.imag + (b.imag - a.imag) * t
            new_z, new_w, jump = _kernels.track_logs(re, im, log_z, log_w)
            if jump < STEP_BOUND:
                break
            n *= 2
            if n > budget:
                raise StepResolutionError(
                    f"segment {a} -> {b} needs more than {MAX_SAMPLES} samples to track branches"
                )
        budget -= n
        log_z, log_w = new_z, new_w
    z = path.end
    return -z * log_z - (1 - z) * log_w
