import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from sample_graphs import edge_to_sink, inf_to_loop, two_loops

from graphck import (
    DomainError,
    admissible_pairs,
    breaking_vertices,
    make_graph,
    restriction_graph,
)
from graphck.ideals import AdmissiblePair


class TestBreakingVertices:
    def test_no_edges_leave_complement(self):
        assert breaking_vertices(inf_to_loop(), {"w"}) == frozenset()

    def test_finitely_many_edges_leave(self):
        g = make_graph(["v", "w", "z"], [[0, "inf", 2], [0, 1, 0], [0, 0, 1]])
        assert breaking_vertices(g, {"w"}) == frozenset({"v"})

    def test_full_set_has_none(self):
        g = make_graph(["v", "w"], [[0, "inf"], [0, 1]])
        assert breaking_vertices(g, {"v", "w"}) == frozenset()

    def test_rejects_non_saturated(self):
        with pytest.raises(DomainError):
            breaking_vertices(edge_to_sink(), {"b"})  # a emits only into {b}

    def test_rejects_non_hereditary(self):
        with pytest.raises(DomainError):
            breaking_vertices(edge_to_sink(), {"a"})


class TestAdmissiblePairs:
    def test_edge_to_sink_has_two(self):
        lattice = admissible_pairs(edge_to_sink())
        assert len(lattice.nodes) == 2

    def test_inf_to_loop_has_three(self):
        lattice = admissible_pairs(inf_to_loop())
        hs = sorted(sorted(p.h) for p in lattice.nodes)
        assert hs == [[], ["v", "w"], ["w"]]

    def test_two_loops_has_two(self):
        assert len(admissible_pairs(two_loops()).nodes) == 2

    def test_breaking_vertex_doubles_nodes(self):
        g = make_graph(["v", "w", "z"], [[0, "inf", 2], [0, 1, 0], [0, 0, 1]])
        lattice = admissible_pairs(g)
        assert AdmissiblePair(frozenset({"w"}), frozenset({"v"})) in lattice.nodes
        assert AdmissiblePair(frozenset({"w"}), frozenset()) in lattice.nodes

    def test_bottom_and_top(self):
        lattice = admissible_pairs(inf_to_loop())
        assert lattice.bottom() in lattice.nodes
        top = lattice.top()
        assert top.h == {"v", "w"} and top.s == frozenset()

    def test_order_is_partial_order(self):
        g = make_graph(["v", "w", "z"], [[0, "inf", 2], [0, 1, 0], [0, 0, 1]])
        lattice = admissible_pairs(g)
        n = len(lattice.nodes)
        for i in range(n):
            assert (i, i) in lattice.order
        for i, j in lattice.order:
            if i != j:
                assert (j, i) not in lattice.order
        for i, j in lattice.order:
            for k in range(n):
                if (j, k) in lattice.order:
                    assert (i, k) in lattice.order

    @settings(max_examples=50, deadline=None)
    @given(graphs(max_vertices=4, entries=(0, 1, "inf")))
    def test_count_matches_oracle(self, g):
        lattice = admissible_pairs(g)
        assert len(lattice.nodes) == oracles.oracle_admissible_pair_count(g)

    def test_dot_output_mentions_nodes(self):
        dot = admissible_pairs(inf_to_loop()).to_dot()
        assert "digraph" in dot and "n0" in dot


class TestRestrictionGraph:
    def test_single_looped_vertex(self):
        out = restriction_graph(inf_to_loop(), AdmissiblePair(frozenset({"w"}), frozenset()))
        assert out.to_json() == {"vertices": ["w"], "adjacency": [[1]]}

    def test_full_pair_is_identity(self):
        g = inf_to_loop()
        pair = AdmissiblePair(frozenset(g.vertices), frozenset())
        assert restriction_graph(g, pair) == g

    def test_empty_pair(self):
        out = restriction_graph(inf_to_loop(), AdmissiblePair(frozenset(), frozenset()))
        assert out.n == 0

    def test_breaking_vertex_keeps_edges_into_h(self):
        g = make_graph(["v", "w", "z"], [[0, "inf", 2], [0, 1, 0], [0, 0, 1]])
        pair = AdmissiblePair(frozenset({"w"}), frozenset({"v"}))
        out = restriction_graph(g, pair)
        assert set(out.vertices) == {"v", "w"}
        assert out.a("v", "w").is_infinite
        assert out.a("v", "v") == 0

    def test_rejects_inadmissible(self):
        g = inf_to_loop()
        with pytest.raises(DomainError):
            restriction_graph(g, AdmissiblePair(frozenset({"w"}), frozenset({"v"})))


class TestStablyCompleteLattices:
    def test_pairs_equal_hereditary_subsets_after_canonicalization(self):
        # in a stably complete graph every subset is saturated and no
        # vertex breaks, so admissible pairs biject with hereditary sets
        import random
        from itertools import combinations

        from graphck import canonicalize, is_hereditary
        from graphck.corpus import random_graph

        rng = random.Random(42)
        for _ in range(15):
            g, _ = canonicalize(random_graph(random.Random(rng.getrandbits(64)), 4))
            hereditary = sum(
                1
                for k in range(g.n + 1)
                for combo in combinations(g.vertices, k)
                if is_hereditary(g, set(combo))
            )
            assert len(admissible_pairs(g).nodes) == hereditary
