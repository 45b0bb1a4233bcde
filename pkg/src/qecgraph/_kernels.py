"""Hot numeric kernels: cyclic Jacobi rotations and all-pairs BFS.

Each kernel has two interchangeable flavours: a numba-compiled one (used by
default when numba imports cleanly) and a pure-numpy fallback.  Setting the
environment variable QECGRAPH_NO_NUMBA=1 before import forces the numpy path.
The public names ``jacobi_cyclic`` and ``bfs_all_pairs`` always point at the
active flavour; benchmarks/bench_kernels.py times both.
"""

import math
import os

import numpy as np

_FORCE_NUMPY = os.environ.get("QECGRAPH_NO_NUMBA", "").strip().lower() not in ("", "0", "false")

if _FORCE_NUMPY:
    USING_NUMBA = False
else:
    try:
        from numba import njit

        USING_NUMBA = True
    except ImportError:
        USING_NUMBA = False


def _jacobi_cyclic_py(a, v, accumulate, tol, max_sweeps):
    # Shared reference implementation; compiled by numba below, and the numpy
    # flavour mirrors it with vectorized row/column updates.
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = abs(a[p, q])
                if x > off:
                    off = x
        if off <= tol:
            return sweep
        if sweep == max_sweeps:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[p, k] = a[k, p]
                        a[k, q] = s * akp + c * akq
                        a[q, k] = a[k, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if accumulate:
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * vkq
                        v[k, q] = s * vkp + c * vkq
    return -1


def jacobi_cyclic_numpy(a, v, accumulate, tol, max_sweeps):
    """Run cyclic Jacobi sweeps on symmetric ``a`` in place.

    Parameters
    ----------
    a : (n, n) float64 ndarray
        Symmetric matrix; on convergence its diagonal holds the eigenvalues.
    v : (n, n) float64 ndarray
        Accumulates rotations (columns become eigenvectors) when
        ``accumulate`` is true; pass a 1x1 dummy otherwise.
    accumulate : bool
    tol : float
        Convergence threshold on the largest off-diagonal magnitude.
    max_sweeps : int

    Returns
    -------
    int
        Number of sweeps performed, or -1 if the cap was hit unconverged.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        work = np.abs(a).copy()
        np.fill_diagonal(work, 0.0)
        off = work.max() if n > 1 else 0.0
        if off <= tol:
            return sweep
        if sweep == max_sweeps:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                akp = a[:, p].copy()
                akq = a[:, q].copy()
                a[:, p] = c * akp - s * akq
                a[:, q] = s * akp + c * akq
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if accumulate:
                    vkp = v[:, p].copy()
                    vkq = v[:, q].copy()
                    v[:, p] = c * vkp - s * vkq
                    v[:, q] = s * vkp + c * vkq
    return -1


def bfs_all_pairs_numpy(adj):
    """All-pairs hop distances of a boolean adjacency matrix; -1 marks unreachable."""
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int16)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = True
        d = 0
        while True:
            reached = adj[frontier].any(axis=0) & (row < 0)
            if not reached.any():
                break
            d += 1
            row[reached] = d
            frontier = reached
    return dist


if USING_NUMBA:
    jacobi_cyclic_numba = njit(cache=True)(_jacobi_cyclic_py)

    @njit(cache=True)
    def bfs_all_pairs_numba(adj):
        n = adj.shape[0]
        dist = np.full((n, n), -1, dtype=np.int16)
        queue = np.empty(n, dtype=np.int64)
        for s in range(n):
            head = 0
            tail = 0
            dist[s, s] = 0
            queue[tail] = s
            tail += 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[s, u]
                for w in range(n):
                    if adj[u, w] != 0 and dist[s, w] < 0:
                        dist[s, w] = du + 1
                        queue[tail] = w
                        tail += 1
        return dist

    def jacobi_cyclic(a, v, accumulate, tol, max_sweeps):
        return jacobi_cyclic_numba(a, v, accumulate, tol, max_sweeps)

    def bfs_all_pairs(adj):
        return bfs_all_pairs_numba(np.ascontiguousarray(adj, dtype=np.uint8))

else:
    jacobi_cyclic = jacobi_cyclic_numpy
    bfs_all_pairs = bfs_all_pairs_numpy
