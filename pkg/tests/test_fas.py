import random

import pytest
from hypothesis import given, settings, strategies as st

from arcpack.digraph import Digraph, backward_arcs, is_acyclic
from arcpack.fas import (
    enumerate_min_fas,
    feedback_arc_set_size,
    min_fas_induces_path,
    min_fas_path,
    min_feedback_arc_set,
    mindeg_lower_bound,
)
from arcpack.instances import (
    builtin,
    label_of,
    paper_T_backward_arcs,
    random_oriented,
    random_tournament,
)
from oracles import min_fas_sets_brute, random_digraph, tau_perm


class TestMinFeedbackArcSet:
    @pytest.mark.parametrize(
        "name,tau",
        [
            ("paper-T", 12),
            ("paper-Tprime", 15),
            ("paper-T7", 5),
            ("paper-T11", 17),
            ("transitive-10", 0),
        ],
    )
    def test_builtin_values(self, name, tau):
        assert feedback_arc_set_size(builtin(name)) == tau

    def test_certificate_invariants(self, paper_T):
        res = min_feedback_arc_set(paper_T)
        assert res.tau == 12
        assert len(res.arcs) == 12
        assert res.arcs == backward_arcs(paper_T, res.ordering)
        assert is_acyclic(paper_T.without_arcs(res.arcs))

    def test_deterministic(self, paper_T7):
        a = min_feedback_arc_set(paper_T7)
        b = min_feedback_arc_set(paper_T7)
        assert a.ordering == b.ordering and a.arcs == b.arcs

    def test_vertex_cap(self):
        with pytest.raises(ValueError, match="capped at 24"):
            feedback_arc_set_size(Digraph(25, [0] * 25))
        with pytest.raises(ValueError, match="capped at 4"):
            feedback_arc_set_size(Digraph(5, [0] * 5), max_vertices=4)

    @settings(max_examples=100, deadline=None)
    @given(
        st.integers(1, 7),
        st.floats(0.2, 0.8),
        st.integers(0, 2**32 - 1),
    )
    def test_matches_permutation_brute(self, n, p, seed):
        d = random_digraph(n, p, seed)  # 2-cycles included
        res = min_feedback_arc_set(d)
        assert res.tau == tau_perm(d)
        assert res.arcs == backward_arcs(d, res.ordering)
        assert is_acyclic(d.without_arcs(res.arcs))

    def test_two_cycle_needs_one_arc(self):
        d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        assert feedback_arc_set_size(d) == 1


class TestEnumerateMinFas:
    def test_matches_brute_on_smalls(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randrange(2, 6)
            d = random_digraph(n, rng.uniform(0.3, 0.8), rng.randrange(1 << 32))
            sets = enumerate_min_fas(d, limit=10_000)
            assert set(sets) == min_fas_sets_brute(d)
            assert len(sets) == len(set(sets))

    def test_paper_T_counts(self, paper_T):
        sets = enumerate_min_fas(paper_T, limit=500)
        assert len(sets) == 117
        assert enumerate_min_fas(paper_T, limit=1000) == sets  # cap-stable
        assert paper_T_backward_arcs() in sets
        tau = feedback_arc_set_size(paper_T)
        for s in sets:
            assert len(s) == tau
            assert is_acyclic(paper_T.without_arcs(s))

    def test_paper_T7_counts(self, paper_T7):
        sets = enumerate_min_fas(paper_T7, limit=500)
        assert len(sets) == 13

    def test_limit_truncates_deterministically(self, paper_T7):
        sets = enumerate_min_fas(paper_T7, limit=500)
        assert enumerate_min_fas(paper_T7, limit=5) == sets[:5]

    def test_sorted_output(self, paper_T7):
        sets = enumerate_min_fas(paper_T7, limit=500)
        keys = [tuple(sorted(s)) for s in sets]
        assert keys == sorted(keys)

    def test_vertex_cap(self):
        with pytest.raises(ValueError, match="capped at 16"):
            enumerate_min_fas(Digraph(17, [0] * 17), limit=10)


class TestMindegLowerBound:
    def test_formula(self):
        t = random_tournament(9, 3)
        k = t.min_out_degree()
        assert mindeg_lower_bound(t) == k * (k + 1) // 2

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 10), st.integers(0, 2**32 - 1))
    def test_bound_holds_on_random_oriented(self, n, seed):
        g = random_oriented(n, 0.5, seed)
        assert feedback_arc_set_size(g) >= mindeg_lower_bound(g)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2**32 - 1))
    def test_bound_holds_with_two_cycles(self, n, seed):
        d = random_digraph(n, 0.5, seed)
        assert feedback_arc_set_size(d) >= mindeg_lower_bound(d)


class TestMinFasPath:
    def test_paper_T_positive(self, paper_T):
        arcs = paper_T_backward_arcs()
        assert min_fas_induces_path(paper_T, arcs)
        path = min_fas_path(paper_T, arcs)
        assert path is not None
        assert "".join(label_of(v) for v in path) == "mkigeca"

    def test_rejects_arcs_not_in_graph(self, paper_T):
        with pytest.raises(ValueError):
            min_fas_induces_path(paper_T, [(0, 1), (1, 0)])

    def test_wrong_size_is_false(self, paper_T):
        arcs = set(paper_T_backward_arcs())
        arcs.discard(next(iter(arcs)))
        assert not min_fas_induces_path(paper_T, arcs)

    def test_non_fas_is_false(self, paper_T):
        # 12 arcs whose removal leaves a cycle cannot be a minimum FAS
        arcs = sorted(paper_T.arcs())[:12]
        assert not min_fas_induces_path(paper_T, arcs)

    def test_disconnected_fas_is_false(self):
        # two disjoint 3-cycles: a minimum FAS takes one arc from each,
        # and two disjoint arcs never trace a single path
        d = Digraph.from_arcs(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        fas = frozenset({(2, 0), (5, 3)})
        assert feedback_arc_set_size(d) == 2
        assert not min_fas_induces_path(d, fas)
        assert min_fas_path(d, fas) is None
