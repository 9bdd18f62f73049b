# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels: Clenshaw recurrence, piecewise Chebyshev
evaluation and Horner polynomial evaluation over point arrays."""

import numpy as np

cimport cython


cdef double _clenshaw1(const double[::1] coef, Py_ssize_t n, double t) nogil:
    cdef double b1 = 0.0, b2 = 0.0, tmp
    cdef double t2 = 2.0 * t
    cdef Py_ssize_t k
    for k in range(n - 1, 0, -1):
        tmp = t2 * b1 - b2 + coef[k]
        b2 = b1
        b1 = tmp
    return t * b1 - b2 + coef[0]


def clenshaw(const double[::1] coef, const double[::1] t):
    cdef Py_ssize_t m = t.shape[0]
    cdef Py_ssize_t n = coef.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            out[i] = _clenshaw1(coef, n, t[i])
    return out_arr


def piecewise_clenshaw(
    const double[::1] breaks,
    const double[:, ::1] coefs,
    const long[::1] degrees,
    const double[::1] x,
):
    cdef Py_ssize_t npan = breaks.shape[0] - 1
    cdef Py_ssize_t m = x.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double xi, t, a, b, b1, b2, tmp, t2
    cdef Py_ssize_t i, k, lo, hi, mid, deg
    with nogil:
        for i in range(m):
            xi = x[i]
            if xi <= breaks[0]:
                xi = breaks[0]
                lo = 0
            elif xi >= breaks[npan]:
                xi = breaks[npan]
                lo = npan - 1
            else:
                lo = 0
                hi = npan
                while hi - lo > 1:
                    mid = (lo + hi) >> 1
                    if breaks[mid] <= xi:
                        lo = mid
                    else:
                        hi = mid
            a = breaks[lo]
            b = breaks[lo + 1]
            t = (2.0 * xi - (a + b)) / (b - a)
            deg = degrees[lo]
            b1 = 0.0
            b2 = 0.0
            t2 = 2.0 * t
            for k in range(deg - 1, 0, -1):
                tmp = t2 * b1 - b2 + coefs[lo, k]
                b2 = b1
                b1 = tmp
            out[i] = t * b1 - b2 + coefs[lo, 0]
    return out_arr


def polyval_ascending(const double[::1] coef, const double[::1] x):
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t n = coef.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double acc, xi
    cdef Py_ssize_t i, k
    with nogil:
        for i in range(m):
            xi = x[i]
            acc = 0.0
            for k in range(n - 1, -1, -1):
                acc = acc * xi + coef[k]
            out[i] = acc
    return out_arr
