"""Benchmark the quad matrix product kernel: numba against pure numpy.

Runs the same exact-arithmetic workloads through both implementations,
checks they agree, and prints timings. The numba path is skipped with a
note if the HYPFORGE_NUMBA flag disabled it at import time.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from hypforge import kernels
from hypforge.clifford import operator_chain


def _workloads():
    rng = np.random.default_rng(7)
    sizes = [(16, 16, 16), (64, 64, 64), (128, 128, 128), (128, 256, 128)]
    out = []
    for m, k, n in sizes:
        A = rng.integers(-2, 3, size=(m, k, 4)).astype(np.int64)
        B = rng.integers(-2, 3, size=(k, n, 4)).astype(np.int64)
        out.append(("random %dx%dx%d" % (m, k, n), A, B))
    # a realistic workload: pairwise products of the dim-16 operators
    ops = operator_chain()[2]
    out.append(("operators 128x128", ops.ops_upper[0], ops.ops_lower[1]))
    return out


def _time(fn, A, B, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(A, B)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    have_numba = kernels.USE_NUMBA
    if have_numba:
        # trigger compilation outside the timed region
        warm = np.zeros((2, 2, 4), dtype=np.int64)
        kernels._quad_matmul_numba(warm, warm)

    print("%-22s %12s %12s %8s" % ("workload", "numpy (ms)", "numba (ms)",
                                   "speedup"))
    for name, A, B in _workloads():
        t_np, r_np = _time(kernels._quad_matmul_numpy, A, B, args.repeat)
        if have_numba:
            t_nb, r_nb = _time(kernels._quad_matmul_numba, A, B, args.repeat)
            if not np.array_equal(r_np, r_nb):
                raise SystemExit("kernel mismatch on %s" % name)
            print("%-22s %12.3f %12.3f %7.1fx"
                  % (name, t_np * 1e3, t_nb * 1e3, t_np / t_nb))
        else:
            print("%-22s %12.3f %12s %8s" % (name, t_np * 1e3, "skipped", "-"))
    if not have_numba:
        print("numba path disabled by HYPFORGE_NUMBA; only numpy timed")


if __name__ == "__main__":
    main()
