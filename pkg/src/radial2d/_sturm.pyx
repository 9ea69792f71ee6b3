# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Sturm-sequence kernels for symmetric tridiagonal matrices.

Mirrors ``_sturm_py`` exactly; the two are selected in ``kernels``.
"""
from libc.math cimport fabs


cdef Py_ssize_t _count(const double[::1] d, const double[::1] e2, double x,
                       double pivmin, bint stop_at_one) noexcept nogil:
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i, count = 0
    cdef double q = d[0] - x
    if fabs(q) < pivmin:
        q = -pivmin
    if q < 0:
        count += 1
        if stop_at_one:
            return count
    for i in range(1, n):
        q = d[i] - x - e2[i - 1] / q
        if fabs(q) < pivmin:
            q = -pivmin
        if q < 0:
            count += 1
            if stop_at_one:
                return count
    return count


def sturm_count(const double[::1] d, const double[::1] e2, double x, double pivmin):
    """Number of eigenvalues strictly below ``x``."""
    cdef Py_ssize_t c
    with nogil:
        c = _count(d, e2, x, pivmin, False)
    return c


def bisect_lowest(const double[::1] d, const double[::1] e2, double lo, double hi,
                  double tol, long max_iter, double pivmin):
    """Shrink [lo, hi] around the smallest eigenvalue.

    Returns ``(lo, hi, iterations)``; the caller decides whether the
    bracket is tight enough.
    """
    cdef long it = 0
    cdef double mid
    with nogil:
        while hi - lo > tol and it < max_iter:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if _count(d, e2, mid, pivmin, True) >= 1:
                hi = mid
            else:
                lo = mid
            it += 1
    return lo, hi, it
