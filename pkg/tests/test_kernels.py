import numpy as np
import pytest

from qecgraph import _kernels, graphs
from qecgraph._kernels import (
    USING_NUMBA,
    bfs_all_pairs_numpy,
    jacobi_cyclic_numpy,
)

from _oracles import eig_oracle, floyd_warshall, random_symmetric


def _run_jacobi(kernel, matrix, accumulate=True):
    a = np.array(matrix, dtype=np.float64, order="C")
    n = a.shape[0]
    v = np.eye(n) if accumulate else np.eye(1)
    tol = 1e-13 * np.linalg.norm(a)
    sweeps = kernel(a, v, accumulate, tol, 100)
    return a, v, sweeps


@pytest.mark.parametrize("n", [1, 2, 3, 5, 10, 25])
def test_jacobi_numpy_matches_oracle(n):
    rng = np.random.default_rng(1234 + n)
    m = random_symmetric(rng, n)
    a, v, sweeps = _run_jacobi(jacobi_cyclic_numpy, m)
    assert sweeps >= 0
    got = np.sort(np.diag(a))[::-1]
    want = eig_oracle(m)
    assert np.max(np.abs(got - want)) < 1e-10 * max(1.0, np.linalg.norm(m))


@pytest.mark.skipif(not USING_NUMBA, reason="numba unavailable or disabled")
@pytest.mark.parametrize("n", [2, 3, 8, 20])
def test_jacobi_numba_matches_numpy_path(n):
    rng = np.random.default_rng(99 + n)
    m = random_symmetric(rng, n)
    a1, v1, s1 = _run_jacobi(_kernels.jacobi_cyclic_numba, m)
    a2, v2, s2 = _run_jacobi(jacobi_cyclic_numpy, m)
    assert np.allclose(np.sort(np.diag(a1)), np.sort(np.diag(a2)), atol=1e-12)
    # both paths are cyclic sweeps over the same pair order, so the
    # accumulated rotations should agree to rounding as well
    assert np.allclose(v1, v2, atol=1e-9)


def test_jacobi_reports_nonconvergence_with_tiny_budget():
    rng = np.random.default_rng(7)
    a = random_symmetric(rng, 12)
    v = np.eye(12)
    sweeps = jacobi_cyclic_numpy(a.copy(), v, True, 1e-300, 0)
    assert sweeps == -1


def test_jacobi_diagonal_input_converges_immediately():
    a = np.diag([3.0, 1.0, -2.0])
    v = np.eye(3)
    sweeps = jacobi_cyclic_numpy(a, v, True, 1e-15, 100)
    assert sweeps == 0
    assert np.allclose(v, np.eye(3))


def test_bfs_matches_floyd_warshall_on_random_graphs():
    rng = np.random.default_rng(42)
    for _ in range(25):
        n = int(rng.integers(2, 14))
        g = graphs.random_connected(n, rng)
        adj = g.adjacency(np.uint8)
        got = bfs_all_pairs_numpy(adj)
        want = floyd_warshall(g.adj)
        assert (got == want.astype(np.int64)).all()


def test_bfs_marks_unreachable_pairs():
    g = graphs.disjoint_union(graphs.complete(2), graphs.complete(3))
    dist = bfs_all_pairs_numpy(g.adjacency(np.uint8))
    assert dist[0, 1] == 1
    assert dist[0, 2] == -1
    assert dist[4, 0] == -1


@pytest.mark.skipif(not USING_NUMBA, reason="numba unavailable or disabled")
def test_bfs_numba_matches_numpy():
    rng = np.random.default_rng(5)
    for _ in range(10):
        n = int(rng.integers(2, 20))
        g = graphs.random_connected(n, rng)
        adj = g.adjacency(np.uint8)
        assert (_kernels.bfs_all_pairs_numba(adj) == bfs_all_pairs_numpy(adj)).all()


def test_dispatch_respects_env_flag():
    if _kernels._FORCE_NUMPY:
        assert not USING_NUMBA
        assert _kernels.jacobi_cyclic is jacobi_cyclic_numpy
    if USING_NUMBA:
        assert _kernels.jacobi_cyclic is not jacobi_cyclic_numpy
