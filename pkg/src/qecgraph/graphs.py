"""Graph representation, parametric families, and graph operations.

Vertices are 0-based integers.  Operations fix canonical vertex orderings so
tests can reference vertices deterministically: ``join`` keeps the first
argument's block first, ``double``/``lex_k2`` put all (x, 0) copies before all
(x, 1) copies, ``cartesian`` is row-major.
"""

import itertools
from dataclasses import dataclass

import numpy as np

MAX_VERTICES = 4096


class EdgeListError(ValueError):
    """Malformed edge-list text; remembers the offending line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class OversizeGraphError(ValueError):
    """Graph exceeds the supported vertex count."""


@dataclass(frozen=True)
class SrgParams:
    """Strong-regularity parameters (n, r, e, f)."""

    n: int
    r: int
    e: int
    f: int

    def as_tuple(self):
        return (self.n, self.r, self.e, self.f)


class Graph:
    """Immutable simple undirected graph backed by a boolean adjacency matrix."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency):
        adj = np.asarray(adjacency)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        n = int(adj.shape[0])
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise OversizeGraphError(
                f"graph too large: {n} vertices exceeds the cap of {MAX_VERTICES}"
            )
        adj = adj.astype(bool)
        if (adj != adj.T).any():
            raise ValueError("adjacency must be symmetric")
        if np.diag(adj).any():
            raise ValueError("self-loops are not allowed")
        adj.setflags(write=False)
        self._adj = adj

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph on ``n`` vertices from an iterable of (u, v) pairs."""
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def n(self):
        return int(self._adj.shape[0])

    @property
    def m(self):
        return int(self._adj.sum()) // 2

    @property
    def adj(self):
        """Read-only boolean adjacency matrix."""
        return self._adj

    def adjacency(self, dtype=np.float64):
        """Adjacency matrix as a fresh array of the requested dtype."""
        return self._adj.astype(dtype)

    def degrees(self):
        return self._adj.sum(axis=1).astype(np.int64)

    def edges(self):
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        u, v = np.nonzero(np.triu(self._adj))
        return list(zip(u.tolist(), v.tolist()))

    def has_edge(self, u, v):
        return bool(self._adj[u, v])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and bool((self._adj == other._adj).all())

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _require_count(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def complete(n):
    """Complete graph K_n."""
    n = _require_count("n", n, 1)
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph(adj)


def empty(n):
    """Edgeless graph on n vertices."""
    n = _require_count("n", n, 1)
    return Graph(np.zeros((n, n), dtype=bool))


def cycle(n):
    """Cycle C_n, vertex i adjacent to (i +/- 1) mod n."""
    n = _require_count("n", n, 3)
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    adj[idx, (idx + 1) % n] = True
    return Graph(adj | adj.T)


def path(n):
    """Path P_n, vertex i adjacent to i + 1."""
    n = _require_count("n", n, 1)
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n - 1)
    adj[idx, idx + 1] = True
    return Graph(adj | adj.T)


def join(g1, g2):
    """Join of two graphs: disjoint union plus every edge across the parts.

    Parameters
    ----------
    g1, g2 : Graph

    Returns
    -------
    Graph
        Vertices of ``g1`` first, then ``g2``; always connected with
        diameter at most 2.
    """
    n1, n2 = g1.n, g2.n
    adj = np.ones((n1 + n2, n1 + n2), dtype=bool)
    adj[:n1, :n1] = g1._adj
    adj[n1:, n1:] = g2._adj
    return Graph(adj)


def disjoint_union(g1, g2):
    """Vertex-disjoint union, g1's block first."""
    n1, n2 = g1.n, g2.n
    adj = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    adj[:n1, :n1] = g1._adj
    adj[n1:, n1:] = g2._adj
    return Graph(adj)


def copies(k, g):
    """Disjoint union of k copies of g."""
    k = _require_count("k", k, 1)
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def double(g):
    """Double graph: two copies of V, (x,i) ~ (y,j) iff x ~ y in g.

    Copy 0 occupies vertices 0..n-1, copy 1 occupies n..2n-1.
    """
    n = g.n
    adj = np.zeros((2 * n, 2 * n), dtype=bool)
    adj[:n, :n] = g._adj
    adj[:n, n:] = g._adj
    adj[n:, :n] = g._adj
    adj[n:, n:] = g._adj
    return Graph(adj)


def lex_k2(g):
    """Lexicographic product with K_2: the double graph plus the matching (x,0)-(x,1)."""
    n = g.n
    adj = double(g)._adj.copy()
    idx = np.arange(n)
    adj[idx, idx + n] = True
    adj[idx + n, idx] = True
    return Graph(adj)


def complement(g):
    """Complement on the same vertices."""
    adj = ~g._adj
    np.fill_diagonal(adj, False)
    return Graph(adj)


def line_graph(g):
    """Line graph: vertices are the edges of g, adjacent iff they share an endpoint.

    Edge order follows ``Graph.edges()`` (lexicographic).
    """
    edge_list = g.edges()
    if not edge_list:
        raise ValueError("line graph needs at least one edge")
    incidence = np.zeros((g.n, len(edge_list)), dtype=np.int64)
    for idx, (u, v) in enumerate(edge_list):
        incidence[u, idx] = 1
        incidence[v, idx] = 1
    shared = incidence.T @ incidence
    return Graph(shared == 1)


def cartesian(g1, g2):
    """Cartesian product; vertex (a, b) maps to index a*n2 + b."""
    eye1 = np.eye(g1.n, dtype=bool)
    eye2 = np.eye(g2.n, dtype=bool)
    return Graph(np.kron(g1._adj, eye2) | np.kron(eye1, g2._adj))


def seidel_switch(g, s):
    """Toggle all edges between the vertex set ``s`` and its complement."""
    mask = np.zeros(g.n, dtype=bool)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"switching set contains out-of-range vertex {v}")
        mask[v] = True
    cross = np.logical_xor.outer(mask, mask)
    return Graph(g._adj ^ cross)


def petersen():
    """Petersen graph as the Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    adj = np.zeros((10, 10), dtype=bool)
    for i, a in enumerate(pairs):
        for j, b in enumerate(pairs):
            if i != j and not set(a) & set(b):
                adj[i, j] = True
    return Graph(adj)


def shrikhande():
    """Shrikhande graph as the Cayley graph on Z4 x Z4 with connection set {(+-1,0),(0,+-1),(+-1,+-1) same sign}."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    adj = np.zeros((16, 16), dtype=bool)
    for u in range(16):
        a, b = divmod(u, 4)
        for v in range(16):
            c, d = divmod(v, 4)
            if ((c - a) % 4, (d - b) % 4) in conn:
                adj[u, v] = True
    return Graph(adj)


def clebsch():
    """10-regular Clebsch graph: complement of the folded 5-cube on {0,1}^4."""
    adj = np.zeros((16, 16), dtype=bool)
    for u in range(16):
        for v in range(16):
            if u != v and bin(u ^ v).count("1") in (2, 3):
                adj[u, v] = True
    return Graph(adj)


def schlafli():
    """Schlafli graph: complement of a 27-vertex graph on {a_i, b_i, c_ij}.

    In the base graph a_i ~ b_j iff i != j, a_i and b_i are adjacent to c_jk
    iff i is an endpoint, and c_ij ~ c_kl iff the index pairs are disjoint.
    """
    c_pairs = list(itertools.combinations(range(6), 2))
    c_index = {pair: 12 + k for k, pair in enumerate(c_pairs)}
    edges = []
    for i in range(6):
        for j in range(6):
            if i != j:
                edges.append((i, 6 + j))
    for (j, k), idx in c_index.items():
        for i in (j, k):
            edges.append((i, idx))
            edges.append((6 + i, idx))
    for p, q in itertools.combinations(c_pairs, 2):
        if not set(p) & set(q):
            edges.append((c_index[p], c_index[q]))
    base = Graph.from_edges(27, edges)
    return complement(base)


def triangular(n):
    """Triangular graph T(n): the line graph of K_n."""
    n = _require_count("n", n, 2)
    return line_graph(complete(n))


def grid(n):
    """Rook's graph K_n x K_n (the n-by-n grid in the Cartesian-product sense)."""
    n = _require_count("n", n, 2)
    k = complete(n)
    return cartesian(k, k)


_CHANG_SWITCH_EDGE_SETS = {
    1: [(0, 1), (2, 3), (4, 5), (6, 7)],
    2: [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
    3: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)],
}


def chang(i):
    """Chang graph i in {1,2,3}: Seidel switching of T(8).

    The switching sets are the line-graph vertices of (1) a perfect matching,
    (2) a disjoint triangle plus 5-cycle, and (3) an 8-cycle in K_8.
    """
    if i not in _CHANG_SWITCH_EDGE_SETS:
        raise ValueError(f"chang index must be 1, 2 or 3, got {i!r}")
    t8 = triangular(8)
    edge_index = {edge: idx for idx, edge in enumerate(complete(8).edges())}
    switch_set = [edge_index[tuple(sorted(e))] for e in _CHANG_SWITCH_EDGE_SETS[i]]
    return seidel_switch(t8, switch_set)


def hoffman_singleton():
    """Hoffman-Singleton graph via the pentagon/pentagram construction.

    Pentagons P_0..P_4 (j ~ j+-1), pentagrams Q_0..Q_4 (k ~ k+-2), and vertex
    j of P_h joined to vertex (h*i + j) mod 5 of Q_i.
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
    for i in range(5):
        for k in range(5):
            edges.append((25 + 5 * i + k, 25 + 5 * i + (k + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, edges)


def from_edge_list(text):
    """Parse an edge-list document into a Graph.

    Format: optional first line ``n <count>`` fixing the vertex count; every
    other non-blank line that does not start with ``#`` reads ``u v``.
    Duplicate edges collapse silently; self-loops are errors.

    Raises
    ------
    EdgeListError
        Naming the offending line.
    """
    declared_n = None
    edges = []
    max_seen = -1
    saw_edge = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not saw_edge and declared_n is None and parts[0].lower() == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise EdgeListError(line_no, f"header must read 'n <count>', got {raw!r}")
            declared_n = int(parts[1])
            if declared_n < 1:
                raise EdgeListError(line_no, "declared vertex count must be positive")
            if declared_n > MAX_VERTICES:
                raise EdgeListError(line_no, f"declared vertex count exceeds the cap of {MAX_VERTICES}")
            continue
        if len(parts) != 2:
            raise EdgeListError(line_no, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(line_no, f"vertex indices must be decimal integers, got {raw!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(line_no, "negative vertex index")
        if u == v:
            raise EdgeListError(line_no, f"self-loop at vertex {u}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise EdgeListError(line_no, f"vertex index beyond declared count {declared_n}")
        saw_edge = True
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    if n < 1:
        raise EdgeListError(0, "edge list defines no vertices")
    if n > MAX_VERTICES:
        raise EdgeListError(0, f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    return Graph.from_edges(n, edges)


def is_connected(g):
    """Breadth-first reachability of every vertex from vertex 0."""
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = g._adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def regularity(g):
    """Common degree r if the graph is regular, else None."""
    deg = g.degrees()
    if (deg == deg[0]).all():
        return int(deg[0])
    return None


def srg_parameters(g):
    """Strong-regularity parameters, or None.

    Returns (n, r, e, f) iff g is regular, neither complete nor empty, and the
    common-neighbour counts are constant over adjacent pairs (e) and over
    non-adjacent pairs (f).
    """
    n = g.n
    if n < 3:
        return None
    r = regularity(g)
    if r is None or r == 0 or r == n - 1:
        return None
    counts = g._adj.astype(np.int64)
    common = counts @ counts
    nonadj = ~g._adj
    np.fill_diagonal(nonadj, False)
    e_vals = common[g._adj]
    f_vals = common[nonadj]
    if (e_vals != e_vals[0]).any() or (f_vals != f_vals[0]).any():
        return None
    return SrgParams(n, r, int(e_vals[0]), int(f_vals[0]))


def random_connected(n, rng, extra_edge_prob=0.3):
    """Random connected graph: a random spanning tree plus independent extra edges."""
    n = _require_count("n", n, 1)
    adj = np.zeros((n, n), dtype=bool)
    order = rng.permutation(n)
    for idx in range(1, n):
        a = int(order[idx])
        b = int(order[rng.integers(0, idx)])
        adj[a, b] = adj[b, a] = True
    iu, iv = np.triu_indices(n, 1)
    extras = rng.random(iu.size) < extra_edge_prob
    adj[iu[extras], iv[extras]] = True
    return Graph(adj | adj.T)
