import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qecgraph import graphs
from qecgraph.graphs import EdgeListError, Graph, OversizeGraphError

from _oracles import PETERSEN_EDGES, girth, has_clique


class TestGraphType:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(np.zeros((2, 3), dtype=bool))
        with pytest.raises(ValueError):
            Graph(np.zeros((0, 0), dtype=bool))
        with pytest.raises(ValueError):
            Graph(np.array([[0, 1], [0, 0]], dtype=bool))
        with pytest.raises(ValueError):
            Graph(np.eye(3, dtype=bool))

    def test_adjacency_is_immutable(self):
        g = graphs.complete(3)
        with pytest.raises(ValueError):
            g.adj[0, 1] = False
        fresh = g.adjacency()
        fresh[0, 1] = 0.0
        assert g.has_edge(0, 1)

    def test_equality_and_hash(self):
        assert graphs.complete(3) == graphs.cycle(3)
        assert hash(graphs.complete(3)) == hash(graphs.cycle(3))
        assert graphs.complete(3) != graphs.path(3)

    def test_from_edges_bounds(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_oversize_rejected(self):
        with pytest.raises(OversizeGraphError):
            graphs.empty(graphs.MAX_VERTICES + 1)


class TestGenerators:
    @given(st.integers(min_value=1, max_value=30))
    def test_complete_and_empty_counts(self, n):
        assert graphs.complete(n).m == n * (n - 1) // 2
        assert graphs.empty(n).m == 0

    @given(st.integers(min_value=3, max_value=30))
    def test_cycle_structure(self, n):
        g = graphs.cycle(n)
        assert g.m == n
        assert (g.degrees() == 2).all()
        assert graphs.is_connected(g)

    @given(st.integers(min_value=1, max_value=30))
    def test_path_structure(self, n):
        g = graphs.path(n)
        assert g.m == n - 1
        assert graphs.is_connected(g)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            graphs.cycle(2)
        with pytest.raises(ValueError):
            graphs.complete(0)
        with pytest.raises(TypeError):
            graphs.complete(True)
        with pytest.raises(TypeError):
            graphs.cycle(4.0)


class TestOperations:
    def test_join_blocks(self):
        g = graphs.join(graphs.complete(2), graphs.empty(3))
        assert (g.n, g.m) == (5, 1 + 6)
        assert g.has_edge(0, 1)
        assert g.has_edge(1, 4)
        assert not g.has_edge(2, 3)

    def test_join_of_empties_is_complete_bipartite(self):
        g = graphs.join(graphs.empty(2), graphs.empty(4))
        assert sorted(g.degrees().tolist()) == [2, 2, 2, 2, 4, 4]
        assert g.m == 8

    def test_disjoint_union_and_copies(self):
        u = graphs.disjoint_union(graphs.complete(2), graphs.cycle(3))
        assert (u.n, u.m) == (5, 4)
        assert not graphs.is_connected(u)
        c = graphs.copies(3, graphs.complete(2))
        assert (c.n, c.m) == (6, 3)
        assert c.has_edge(0, 1) and c.has_edge(2, 3) and c.has_edge(4, 5)
        with pytest.raises(ValueError):
            graphs.copies(0, graphs.complete(2))

    def test_double_structure(self):
        g = graphs.double(graphs.path(3))
        assert (g.n, g.m) == (6, 8)
        base = graphs.path(3)
        for x in range(3):
            for y in range(3):
                expected = base.has_edge(x, y)
                assert g.has_edge(x, y) == expected or x == y
                assert g.has_edge(x, y + 3) == expected
        assert not g.has_edge(0, 3)

    def test_lex_k2_structure(self):
        g = graphs.lex_k2(graphs.path(3))
        assert (g.n, g.m) == (6, 11)
        assert g.has_edge(0, 3) and g.has_edge(1, 4) and g.has_edge(2, 5)
        assert graphs.lex_k2(graphs.complete(3)) == graphs.complete(6)

    def test_complement_and_line(self):
        assert graphs.complement(graphs.empty(4)) == graphs.complete(4)
        t5 = graphs.line_graph(graphs.complete(5))
        assert graphs.complement(t5) == graphs.petersen()
        with pytest.raises(ValueError):
            graphs.line_graph(graphs.empty(3))

    def test_cartesian_product(self):
        g = graphs.cartesian(graphs.complete(2), graphs.complete(2))
        assert (g.n, g.m) == (4, 4)
        assert (g.degrees() == 2).all()
        rook = graphs.cartesian(graphs.complete(4), graphs.complete(4))
        assert rook == graphs.grid(4)

    def test_seidel_switch(self):
        g = graphs.path(3)
        s = graphs.seidel_switch(g, [0])
        assert not s.has_edge(0, 1)
        assert s.has_edge(0, 2)
        assert s.has_edge(1, 2) == g.has_edge(1, 2)

    @given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=2**30))
    @settings(max_examples=40, deadline=None)
    def test_complement_involution(self, n, seed):
        rng = np.random.default_rng(seed)
        g = graphs.random_connected(min(n, 10), rng)
        assert graphs.complement(graphs.complement(g)) == g

    @given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=2**30))
    @settings(max_examples=40, deadline=None)
    def test_seidel_involution(self, n, seed):
        rng = np.random.default_rng(seed)
        g = graphs.random_connected(n, rng)
        subset = [v for v in range(n) if rng.integers(0, 2)]
        assert graphs.seidel_switch(graphs.seidel_switch(g, subset), subset) == g

    @given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=2**30))
    @settings(max_examples=30, deadline=None)
    def test_double_and_lex_degrees(self, n, seed):
        rng = np.random.default_rng(seed)
        g = graphs.random_connected(n, rng)
        deg = g.degrees()
        twice = np.concatenate([2 * deg, 2 * deg])
        assert (graphs.double(g).degrees() == twice).all()
        assert (graphs.lex_k2(g).degrees() == twice + 1).all()


class TestNamedConstructions:
    def test_petersen_edge_set(self):
        assert graphs.petersen().edges() == PETERSEN_EDGES

    @pytest.mark.parametrize(
        "name,builder,params",
        [
            ("petersen", graphs.petersen, (10, 3, 0, 1)),
            ("shrikhande", graphs.shrikhande, (16, 6, 2, 2)),
            ("clebsch", graphs.clebsch, (16, 10, 6, 6)),
            ("schlafli", graphs.schlafli, (27, 16, 10, 8)),
            ("hoffman_singleton", graphs.hoffman_singleton, (50, 7, 0, 1)),
        ],
    )
    def test_fixed_srg_parameters(self, name, builder, params):
        assert graphs.srg_parameters(builder()).as_tuple() == params

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_chang_parameters(self, i):
        assert graphs.srg_parameters(graphs.chang(i)).as_tuple() == (28, 12, 6, 4)

    def test_chang_index_validation(self):
        with pytest.raises(ValueError):
            graphs.chang(0)
        with pytest.raises(ValueError):
            graphs.chang(4)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_triangular_parameters(self, n):
        want = (n * (n - 1) // 2, 2 * (n - 2), n - 2, 4)
        assert graphs.srg_parameters(graphs.triangular(n)).as_tuple() == want

    @pytest.mark.parametrize("n", range(3, 6))
    def test_grid_parameters(self, n):
        want = (n * n, 2 * (n - 1), n - 2, 2)
        assert graphs.srg_parameters(graphs.grid(n)).as_tuple() == want

    def test_shrikhande_differs_from_grid4_by_cliques(self):
        # same parameters (16, 6, 2, 2); the rook's graph has 4-cliques,
        # shrikhande does not
        assert has_clique(graphs.grid(4).adj, 4)
        assert not has_clique(graphs.shrikhande().adj, 4)

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_chang_differs_from_triangular8_by_cliques(self, i):
        assert has_clique(graphs.triangular(8).adj, 7)
        assert not has_clique(graphs.chang(i).adj, 7)

    def test_chang_graphs_mutually_distinct(self):
        assert graphs.chang(1) != graphs.chang(2)
        assert graphs.chang(1) != graphs.chang(3)
        assert graphs.chang(2) != graphs.chang(3)

    def test_hoffman_singleton_girth(self):
        assert girth(graphs.hoffman_singleton().adj) == 5

    def test_petersen_girth(self):
        assert girth(graphs.petersen().adj) == 5

    def test_non_srg_queries(self):
        assert graphs.srg_parameters(graphs.complete(5)) is None
        assert graphs.srg_parameters(graphs.empty(4)) is None
        assert graphs.srg_parameters(graphs.path(4)) is None
        assert graphs.srg_parameters(graphs.cycle(5)).as_tuple() == (5, 2, 0, 1)


class TestQueries:
    def test_regularity(self):
        assert graphs.regularity(graphs.cycle(6)) == 2
        assert graphs.regularity(graphs.path(3)) is None
        assert graphs.regularity(graphs.empty(4)) == 0

    def test_is_connected(self):
        assert graphs.is_connected(graphs.path(6))
        assert not graphs.is_connected(graphs.disjoint_union(graphs.complete(2), graphs.complete(2)))
        assert graphs.is_connected(graphs.complete(1))

    @given(st.integers(min_value=2, max_value=16), st.integers(min_value=0, max_value=2**30))
    @settings(max_examples=40, deadline=None)
    def test_random_connected_is_connected(self, n, seed):
        rng = np.random.default_rng(seed)
        g = graphs.random_connected(n, rng)
        assert g.n == n
        assert graphs.is_connected(g)


class TestEdgeList:
    def test_round_trip(self):
        g = graphs.petersen()
        lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
        parsed = graphs.from_edge_list("\n".join(lines))
        assert parsed == g

    def test_comments_and_blank_lines(self):
        text = "# a path\n\nn 3\n0 1\n# middle\n1 2\n"
        g = graphs.from_edge_list(text)
        assert g == graphs.path(3)

    def test_duplicate_edges_collapse(self):
        g = graphs.from_edge_list("n 2\n0 1\n1 0\n")
        assert g.m == 1

    def test_header_is_optional(self):
        g = graphs.from_edge_list("0 1\n1 2\n")
        assert g == graphs.path(3)

    def test_header_can_add_isolated_vertices(self):
        g = graphs.from_edge_list("n 4\n0 1\n")
        assert g.n == 4
        assert not graphs.is_connected(g)

    @pytest.mark.parametrize(
        "text,line_no",
        [
            ("n 3\n0\n", 2),
            ("n 3\n0 x\n", 2),
            ("n 3\n0 5\n", 2),
            ("n 3\n1 1\n", 2),
            ("n 3\n0 1\n2 -1\n", 3),
            ("n 0\n", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line_no):
        with pytest.raises(EdgeListError) as exc_info:
            graphs.from_edge_list(text)
        assert exc_info.value.line_no == line_no
