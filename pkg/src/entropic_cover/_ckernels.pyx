# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see _pykernels for the reference semantics."""

from libc.math cimport atan2, log, hypot, fabs, floor, M_PI

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef double TWO_PI = 2.0 * M_PI


cdef inline int _sign(double v) noexcept nogil:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def count_crossings(const double[::1] re, const double[::1] im, int start_sign):
    cdef Py_ssize_t n = re.shape[0], k
    cdef long dp = 0, dq = 0
    cdef int sa, sb, step
    cdef double x
    if n < 2:
        return 0, 0
    sa = _sign(im[0])
    if im[0] == 0:
        sa = start_sign
    with nogil:
        for k in range(n - 1):
            sb = _sign(im[k + 1])
            if sa * sb < 0:
                x = re[k] + (re[k + 1] - re[k]) * im[k] / (im[k] - im[k + 1])
                step = 2 if sa > 0 else -2
                if x < 0:
                    dp += step
                elif x > 1:
                    dq += step
            sa = sb
    return dp, dq


cdef inline double _nearest(double prev, double raw) noexcept nogil:
    cdef double d = raw - prev
    return raw - TWO_PI * floor(d / TWO_PI + 0.5)


def track_logs(const double[::1] re, const double[::1] im, double complex log0, double complex log1m0):
    cdef Py_ssize_t n = re.shape[0], k
    cdef double a_prev = log0.imag, b_prev = log1m0.imag
    cdef double a, b, jump = 0.0, wr, wi
    if n < 2:
        return log0, log1m0, 0.0
    with nogil:
        for k in range(1, n):
            a = _nearest(a_prev, atan2(im[k], re[k]))
            wr = 1.0 - re[k]
            wi = -im[k]
            b = _nearest(b_prev, atan2(wi, wr))
            if fabs(a - a_prev) > jump:
                jump = fabs(a - a_prev)
            if fabs(b - b_prev) > jump:
                jump = fabs(b - b_prev)
            a_prev = a
            b_prev = b
    k = n - 1
    wr = 1.0 - re[k]
    wi = -im[k]
    return (complex(log(hypot(re[k], im[k])), a_prev),
            complex(log(hypot(wr, wi)), b_prev),
            jump)


def entropy_cover_many(const double[::1] re, const double[::1] im, const long[::1] p, const long[::1] q):
    cdef Py_ssize_t n = re.shape[0], k
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] res = out
    cdef double zr, zi, wr, wi, lr, li, mr, mi, vr, vi
    with nogil:
        for k in range(n):
            zr = re[k]
            zi = im[k]
            wr = 1.0 - zr
            wi = -zi
            lr = log(hypot(zr, zi))
            li = atan2(zi, zr) + M_PI * p[k]
            mr = log(hypot(wr, wi))
            mi = atan2(wi, wr) - M_PI * q[k]
            # -z*L - w*M
            vr = -(zr * lr - zi * li) - (wr * mr - wi * mi)
            vi = -(zr * li + zi * lr) - (wr * mi + wi * mr)
            res[k] = vr + 1j * vi
    return out
