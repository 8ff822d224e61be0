# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernel for the four-angle dependence statistics.

Same contract as bellflow._numkern; selected by bellflow.kernels when the
extension is importable.
"""
import numpy as np

from libc.math cimport cos, fabs, log, sin

cdef double LN2 = 0.6931471805599453


cdef inline double _entropy(double theta) noexcept nogil:
    # xlogx extended by continuity: 0*log(0) = 0
    cdef double s = 0.0
    cdef double q = 0.5 - theta
    if theta > 0.0:
        s -= 2.0 * theta * log(theta)
    if q > 0.0:
        s -= 2.0 * q * log(q)
    return s


cdef inline double _degree(double theta) noexcept nogil:
    cdef double ent = _entropy(theta)
    if theta <= 0.25:
        return ent / LN2 - 2.0
    return 2.0 - ent / LN2


cdef inline double _theta(double delta) noexcept nogil:
    cdef double s = sin(0.5 * delta)
    cdef double t = 0.5 * s * s
    if t > 0.5:
        t = 0.5
    return t


def bell_stats(mu1, mu2, nu1, nu2):
    """Per-config Bell value, sum of |degree|, and sum of degree.

    Inputs are equal-length 1-d float64 arrays of polarizer angles; returns
    three new float64 arrays (bell_value, abs_degree_sum, degree_sum).
    """
    cdef double[::1] a1 = np.ascontiguousarray(mu1, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(mu2, dtype=np.float64)
    cdef double[::1] b1 = np.ascontiguousarray(nu1, dtype=np.float64)
    cdef double[::1] b2 = np.ascontiguousarray(nu2, dtype=np.float64)
    cdef Py_ssize_t n = a1.shape[0]
    if a2.shape[0] != n or b1.shape[0] != n or b2.shape[0] != n:
        raise ValueError("angle arrays must have equal length")

    out_b = np.empty(n, dtype=np.float64)
    out_abs = np.empty(n, dtype=np.float64)
    out_sum = np.empty(n, dtype=np.float64)
    cdef double[::1] vb = out_b
    cdef double[::1] va = out_abs
    cdef double[::1] vs = out_sum

    cdef Py_ssize_t i
    cdef double e11, e12, e21, e22
    with nogil:
        for i in range(n):
            e11 = _degree(_theta(a1[i] - b1[i]))
            e12 = _degree(_theta(a1[i] - b2[i]))
            e21 = _degree(_theta(a2[i] - b1[i]))
            e22 = _degree(_theta(a2[i] - b2[i]))
            vb[i] = (cos(a1[i] - b1[i]) + cos(a1[i] - b2[i])
                     + cos(a2[i] - b1[i]) - cos(a2[i] - b2[i]))
            va[i] = fabs(e11) + fabs(e12) + fabs(e21) + fabs(e22)
            vs[i] = e11 + e12 + e21 + e22
    return out_b, out_abs, out_sum
