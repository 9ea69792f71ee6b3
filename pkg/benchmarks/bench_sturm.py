"""Time the compiled and pure-Python Sturm kernels on FD Hamiltonians.

    python benchmarks/bench_sturm.py [--sizes 1000 10000 100000] [--repeat 3]
"""
import argparse
import time

import numpy as np

from radial2d import Family, MolecularParams, PhysicalContext, build_operator, default_grid, from_molecular
from radial2d import _sturm_py

try:
    from radial2d import _sturm
except ImportError:  # extension not built
    _sturm = None


def operator(n):
    spec = from_molecular(Family.KRATZER, MolecularParams(2.0, 1.0))
    ctx = PhysicalContext()
    op = build_operator(spec, ctx, 1, default_grid(spec, ctx, 1, n_points=n))
    return np.ascontiguousarray(op.diagonal), np.ascontiguousarray(op.off_diagonal**2)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 100_000])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    impls = [("python", _sturm_py)] + ([("cython", _sturm)] if _sturm else [])
    print(f"{'n':>8} {'kernel':>8} {'count [ms]':>11} {'bisect [ms]':>12} {'iters':>6} {'lowest':>22}")
    for n in args.sizes:
        d, e2 = operator(n)
        lo, hi = float(d.min() - 2 * np.sqrt(e2.max())), float(d.min())
        timings = {}
        for name, mod in impls:
            tc, _ = best_of(lambda: mod.sturm_count(d, e2, hi, 1e-300), args.repeat)
            tb, (a, b, it) = best_of(lambda: mod.bisect_lowest(d, e2, lo, hi, 1e-12, 500, 1e-300), args.repeat)
            timings[name] = tb
            print(f"{n:>8} {name:>8} {1e3 * tc:>11.3f} {1e3 * tb:>12.3f} {it:>6} {0.5 * (a + b):>22.15g}")
        if len(timings) == 2:
            print(f"{'':>8} speedup  {timings['python'] / timings['cython']:.1f}x")


if __name__ == "__main__":
    main()
