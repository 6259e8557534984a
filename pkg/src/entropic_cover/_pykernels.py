"""Pure Python/numpy versions of the compiled kernels.

Each function here defines the semantics the compiled versions must match.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def count_crossings(re: np.ndarray, im: np.ndarray, start_sign: int) -> tuple[int, int]:
    """Signed slit crossings of the polyline with vertices ``re + i*im``.

    Upper-to-lower crossings count +2, lower-to-upper -2; crossings left of 0
    go to the first total and right of 1 to the second. A first vertex with
    zero imaginary part takes ``start_sign`` as its side. Vertices on the
    real axis otherwise count as sign 0 and never produce a crossing.
    """
    if len(re) < 2:
        return 0, 0
    s = np.sign(im).astype(np.int64)
    if im[0] == 0:
        s[0] = start_sign
    sa, sb = s[:-1], s[1:]
    cross = sa * sb < 0
    if not cross.any():
        return 0, 0
    r0, r1 = re[:-1][cross], re[1:][cross]
    i0, i1 = im[:-1][cross], im[1:][cross]
    x = r0 + (r1 - r0) * i0 / (i0 - i1)
    step = np.where(sa[cross] > 0, 2, -2)
    return int(step[x < 0].sum()), int(step[x > 1].sum())


def _nearest_unwrap(prev: float, raw: np.ndarray) -> tuple[float, float]:
    seq = np.concatenate(([prev], raw))
    d = np.diff(seq)
    d -= TWO_PI * np.floor(d / TWO_PI + 0.5)
    return prev + d.sum(), float(np.abs(d).max())


def track_logs(re: np.ndarray, im: np.ndarray, log0: complex, log1m0: complex):
    """Continue ``log z`` and ``log(1 - z)`` along samples by nearest-branch choice.

    Returns the final two logarithms and the largest per-step change of their
    imaginary parts.
    """
    if len(re) < 2:
        return complex(log0), complex(log1m0), 0.0
    a_end, ja = _nearest_unwrap(log0.imag, np.arctan2(im[1:], re[1:]))
    wr, wi = 1.0 - re, -im
    b_end, jb = _nearest_unwrap(log1m0.imag, np.arctan2(wi[1:], wr[1:]))
    last_l = complex(np.log(np.hypot(re[-1], im[-1])), a_end)
    last_m = complex(np.log(np.hypot(wr[-1], wi[-1])), b_end)
    return last_l, last_m, max(ja, jb)


def entropy_cover_many(re: np.ndarray, im: np.ndarray, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Vectorised ``Phi(z) - pi*i*p*z + pi*i*q*(1 - z)``; signed zeros select slit sides."""
    z = np.empty(len(re), dtype=np.complex128)
    z.real, z.imag = re, im
    w = np.empty_like(z)
    w.real, w.imag = 1.0 - re, -im
    log_z = np.log(z) + 1j * np.pi * p
    log_w = np.log(w) - 1j * np.pi * q
    return -z * log_z - w * log_w
