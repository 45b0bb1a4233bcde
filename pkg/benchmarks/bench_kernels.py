"""Compare the compiled and pure-numpy kernel paths.

Times the cyclic Jacobi eigensolver and the all-pairs BFS on inputs of
increasing size.  When numba is unavailable (or disabled through
QECGRAPH_NO_NUMBA) only the numpy column is reported.
"""

import argparse
import time

import numpy as np

from qecgraph import _kernels, graphs

JACOBI_SIZES = (30, 60, 120, 240)
BFS_SIZES = (50, 100, 200, 400)


def _time_call(fn, make_args, repeats):
    best = float("inf")
    for _ in range(repeats):
        args = make_args()
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _symmetric(rng, n):
    a = rng.standard_normal((n, n))
    return a + a.T


def bench_jacobi(rng, repeats):
    rows = []
    for n in JACOBI_SIZES:
        base = _symmetric(rng, n)
        tol = 1e-13 * float(np.sqrt((base * base).sum()))

        def args():
            return (base.copy(), np.eye(n), True, tol, 100)

        t_np = _time_call(_kernels.jacobi_cyclic_numpy, args, repeats)
        t_nb = None
        if _kernels.USING_NUMBA:
            _kernels.jacobi_cyclic_numba(*args())  # warm-up, excluded from timing
            t_nb = _time_call(_kernels.jacobi_cyclic_numba, args, repeats)
        rows.append((f"jacobi n={n}", t_np, t_nb))
    return rows


def bench_bfs(rng, repeats):
    rows = []
    for n in BFS_SIZES:
        g = graphs.random_connected(n, rng)
        adj_bool = g.adjacency()
        adj_u8 = np.ascontiguousarray(adj_bool, dtype=np.uint8)

        t_np = _time_call(_kernels.bfs_all_pairs_numpy, lambda: (adj_bool,), repeats)
        t_nb = None
        if _kernels.USING_NUMBA:
            _kernels.bfs_all_pairs_numba(adj_u8)
            t_nb = _time_call(_kernels.bfs_all_pairs_numba, lambda: (adj_u8,), repeats)
        rows.append((f"bfs    n={n}", t_np, t_nb))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats, best is kept")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    if not _kernels.USING_NUMBA:
        print("numba path inactive (not installed, or QECGRAPH_NO_NUMBA set); "
              "timing the numpy path only")

    rows = bench_jacobi(rng, args.repeats) + bench_bfs(rng, args.repeats)
    header = f"{'kernel':<14} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, t_np, t_nb in rows:
        if t_nb is None:
            print(f"{label:<14} {t_np * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
        else:
            print(f"{label:<14} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
