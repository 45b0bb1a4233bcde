"""Shortest-path distance matrices and the diameter-2 identity D = 2J - 2I - A."""

import numpy as np

from ._kernels import bfs_all_pairs


class DisconnectedGraphError(ValueError):
    """Distance requested on a disconnected graph; names two unreachable vertices."""

    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between vertices {u} and {v}")
        self.pair = (u, v)


def distance_matrix(g):
    """All-pairs hop distances via per-source BFS.

    Parameters
    ----------
    g : Graph

    Returns
    -------
    (n, n) int16 ndarray

    Raises
    ------
    DisconnectedGraphError
        If some pair of vertices has no connecting path.
    """
    dist = bfs_all_pairs(g.adj)
    missing = np.argwhere(dist < 0)
    if missing.size:
        u, v = missing[0]
        raise DisconnectedGraphError(int(u), int(v))
    return dist


def diameter(g):
    """Largest distance-matrix entry."""
    return int(distance_matrix(g).max())


def has_diameter_at_most_2(g):
    """True iff every distinct pair is adjacent or shares a neighbour (implies connected)."""
    a = g.adj
    reach = a | (a.astype(np.int64) @ a.astype(np.int64) > 0)
    np.fill_diagonal(reach, True)
    return bool(reach.all())


def distance_from_adjacency_diam2(g):
    """Distance matrix as 2J - 2I - A, valid exactly when diameter <= 2.

    Raises
    ------
    ValueError
        If some pair is neither adjacent nor joined through a common
        neighbour (diameter exceeds 2, or the graph is disconnected).
    """
    a = g.adj
    reach = a | (a.astype(np.int64) @ a.astype(np.int64) > 0)
    np.fill_diagonal(reach, True)
    if not reach.all():
        u, v = np.argwhere(~reach)[0]
        raise ValueError(
            f"diameter exceeds 2: vertices {int(u)} and {int(v)} are neither "
            "adjacent nor joined through a common neighbour"
        )
    dist = np.full((g.n, g.n), 2, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    dist[a] = 1
    return dist
