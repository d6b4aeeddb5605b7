from hypothesis import given, settings

from conftest import graphs
from sample_graphs import (
    edge_to_sink,
    inf_to_loop,
    looped_pair,
    mixed_emitter,
    one_loop,
    two_loops,
)

from graphck import (
    breaking_vertices,
    canonicalize,
    is_isomorphic,
    is_saturated,
    is_stably_complete,
    k_groups,
    make_graph,
    replay,
    saturated_hereditary_sets,
)


class TestIsStablyComplete:
    def test_two_loops_satisfied(self):
        assert is_stably_complete(two_loops()).satisfied

    def test_one_loop_satisfied(self):
        # one simple cycle only, so the two-loop condition is vacuous
        assert is_stably_complete(one_loop()).satisfied

    def test_looped_pair_satisfied(self):
        assert is_stably_complete(looped_pair()).satisfied

    def test_loopless_regular_vertex_flagged(self):
        report = is_stably_complete(edge_to_sink())
        assert not report.satisfied
        assert (2, ("a",)) in report.violations

    def test_missing_infinite_edge_flagged(self):
        # v emits infinitely to w but only finitely to the x it dominates
        g = make_graph(
            ["v", "w", "x"], [[0, "inf", 1], [0, 1, 0], [0, 0, 1]]
        )
        report = is_stably_complete(g)
        assert (4, ("v", "x")) in report.violations

    def test_dominance_without_edge_flagged(self):
        g = make_graph(
            ["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
        )
        report = is_stably_complete(g)
        assert (5, ("a", "c")) in report.violations

    def test_looped_emitter_without_companion_flagged(self):
        g = make_graph(["v"], [["inf"]])
        report = is_stably_complete(g)
        assert (6, ("v",)) in report.violations

    def test_two_cycles_one_loop_flagged(self):
        g = make_graph(["v", "b"], [[1, 1], [1, 0]])
        report = is_stably_complete(g)
        assert (3, ("v",)) in report.violations


class TestCanonicalize:
    def test_already_complete_is_fixed_point(self):
        out, trace = canonicalize(two_loops())
        assert out == two_loops()
        assert trace == []

    def test_source_feeding_two_loops(self):
        g = make_graph(["a", "b"], [[0, 1], [0, 2]])
        out, _ = canonicalize(g)
        assert out.to_json() == {"vertices": ["b"], "adjacency": [[2]]}

    def test_mixed_emitter_trace_shape(self):
        out, trace = canonicalize(mixed_emitter())
        kinds = [r.kind for r in trace]
        assert kinds[0] == "BREAKSPLIT"
        assert "T" in kinds
        assert is_stably_complete(out).satisfied

    def test_trace_replays_to_output(self):
        g = mixed_emitter()
        out, trace = canonicalize(g)
        cur = g
        for rec in trace:
            cur = replay(cur, rec)
        assert cur.canonical_json() == out.canonical_json()

    def test_looped_emitter_gets_companion(self):
        g = make_graph(["v"], [["inf"]])
        out, _ = canonicalize(g)
        assert is_stably_complete(out).satisfied
        assert any(out.is_regular(w) for w in out.vertices)

    def test_empty_graph(self):
        g = make_graph([], [])
        out, trace = canonicalize(g)
        assert out.n == 0 and trace == []

    @settings(max_examples=50, deadline=None)
    @given(graphs(max_vertices=5))
    def test_output_stably_complete_and_k_invariant(self, g):
        out, _ = canonicalize(g)
        assert is_stably_complete(out).satisfied
        assert k_groups(out) == k_groups(g)

    @settings(max_examples=20, deadline=None)
    @given(graphs(max_vertices=4))
    def test_idempotent_up_to_isomorphism(self, g):
        once, _ = canonicalize(g)
        twice, trace = canonicalize(once)
        assert is_isomorphic(once, twice)

    @settings(max_examples=20, deadline=None)
    @given(graphs(max_vertices=4))
    def test_outputs_have_all_subsets_saturated_and_no_breaking(self, g):
        out, _ = canonicalize(g)
        # in stably complete graphs every subset is saturated, which is
        # equivalent to every regular vertex supporting a loop
        from itertools import combinations

        for k in range(out.n + 1):
            for combo in combinations(out.vertices, k):
                assert is_saturated(out, set(combo))
        for h in saturated_hereditary_sets(out):
            assert breaking_vertices(out, h) == frozenset()

    def test_infinite_emitter_to_looped_vertex(self):
        out, _ = canonicalize(inf_to_loop())
        assert is_stably_complete(out).satisfied
        assert k_groups(out) == k_groups(inf_to_loop())
