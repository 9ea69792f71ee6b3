"""Pure-Python Sturm-sequence kernels (fallback for ``_sturm``)."""


def _count(d, e2, x, pivmin, stop_at_one):
    count = 0
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0:
        count += 1
        if stop_at_one:
            return count
    for di, ei in zip(d[1:], e2):
        q = di - x - ei / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0:
            count += 1
            if stop_at_one:
                return count
    return count


def sturm_count(d, e2, x, pivmin):
    """Number of eigenvalues strictly below ``x``."""
    return _count(list(d), list(e2), float(x), pivmin, False)


def bisect_lowest(d, e2, lo, hi, tol, max_iter, pivmin):
    d = [float(v) for v in d]
    e2 = [float(v) for v in e2]
    it = 0
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
