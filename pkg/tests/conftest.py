import numpy as np
import pytest

from qecgraph import graphs


def named_graphs(max_vertices):
    """All named-family instances up to a vertex cap, as (label, graph) pairs.

    Only connected instances are included (QEC needs a connected graph).
    """
    out = []
    for n in range(2, max_vertices + 1):
        out.append((f"K({n})", graphs.complete(n)))
    for n in range(3, max_vertices + 1):
        out.append((f"C({n})", graphs.cycle(n)))
    for n in range(2, max_vertices + 1):
        out.append((f"P({n})", graphs.path(n)))
    for m in range(1, max_vertices):
        for n in range(m, max_vertices - m + 1):
            out.append((f"Kb({m},{n})", graphs.join(graphs.empty(m), graphs.empty(n))))
    for n in range(1, max_vertices):
        out.append((f"star({n})", graphs.join(graphs.empty(1), graphs.empty(n))))
    for n in range(3, max_vertices):
        out.append((f"wheel({n})", graphs.join(graphs.cycle(n), graphs.complete(1))))
    for n in range(1, (max_vertices - 1) // 2 + 1):
        out.append(
            (
                f"friendship({n})",
                graphs.join(graphs.copies(n, graphs.complete(2)), graphs.complete(1)),
            )
        )
    for n in range(4, 12):
        if n * (n - 1) // 2 <= max_vertices:
            out.append((f"T({n})", graphs.triangular(n)))
    for n in range(3, 8):
        if n * n <= max_vertices:
            out.append((f"grid({n})", graphs.grid(n)))
    fixed = [
        ("petersen", graphs.petersen, 10),
        ("shrikhande", graphs.shrikhande, 16),
        ("clebsch", graphs.clebsch, 16),
        ("schlafli", graphs.schlafli, 27),
        ("hoffman_singleton", graphs.hoffman_singleton, 50),
    ]
    for label, builder, size in fixed:
        if size <= max_vertices:
            out.append((label, builder()))
    if 28 <= max_vertices:
        for i in (1, 2, 3):
            out.append((f"chang({i})", graphs.chang(i)))
    return out


def random_pool(count, seed, n_low=3, n_high=10):
    rng = np.random.default_rng(seed)
    pool = []
    for i in range(count):
        n = int(rng.integers(n_low, n_high + 1))
        pool.append((f"random[{i}] n={n}", graphs.random_connected(n, rng)))
    return pool


@pytest.fixture(scope="session")
def named_small():
    return named_graphs(25)


@pytest.fixture(scope="session")
def named_medium():
    return named_graphs(50)
