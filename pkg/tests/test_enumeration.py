import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from arcpack.digraph import Digraph
from arcpack.enumeration import (
    PREDICATES,
    CanonicalCode,
    all_labeled_tournaments,
    aut_group_size,
    canonical_code,
    canonical_form,
    class_codes,
    class_count,
    enumerate_tournaments,
    labeled_count_identity_holds,
    search_counterexamples,
    verify_nu_eq_tau_upto,
)
from arcpack.fas import feedback_arc_set_size
from arcpack.instances import random_tournament
from arcpack.packing import max_cycle_packing

KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


def tournaments(min_n=2, max_n=7):
    return st.builds(
        random_tournament, st.integers(min_n, max_n), st.integers(0, 2**32 - 1)
    )


class TestCanonicalForm:
    @settings(max_examples=200, deadline=None)
    @given(tournaments(), st.randoms(use_true_random=False))
    def test_relabeling_invariance(self, t, rnd):
        perm = list(range(t.n))
        rnd.shuffle(perm)
        assert canonical_form(t.relabeled(perm)) == canonical_form(t)

    @settings(max_examples=60, deadline=None)
    @given(tournaments(max_n=5))
    def test_aut_matches_permutation_brute(self, t):
        brute = sum(
            1
            for p in itertools.permutations(range(t.n))
            if t.relabeled(p) == t
        )
        assert aut_group_size(t) == brute

    def test_transitive_is_rigid(self):
        t = Digraph.from_arcs(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        code, aut = canonical_form(t)
        assert aut == 1
        assert code.value == 0  # all-forward is the lexicographic minimum

    def test_three_cycle_rotations(self):
        t = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert aut_group_size(t) == 3

    def test_decode_roundtrip(self):
        for n in range(1, 8):
            for code in class_codes(n)[:40]:
                t = code.decode()
                assert t.is_tournament()
                assert canonical_code(t) == code

    def test_hex_width(self):
        assert CanonicalCode(7, 0).hex() == "000000"  # 21 bits -> 6 digits
        assert CanonicalCode(2, 1).hex() == "1"

    def test_rejects_non_tournament(self):
        with pytest.raises(ValueError, match="tournaments only"):
            canonical_code(Digraph.from_arcs(3, [(0, 1)]))

    def test_rejects_large_order(self):
        with pytest.raises(ValueError, match="capped at order 7"):
            canonical_code(random_tournament(8, 1))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
    def test_class_counts(self, n, count):
        assert class_count(n) == count

    def test_identity_all_orders(self):
        assert all(labeled_count_identity_holds(n) for n in range(1, 8))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_full_scan_cross_check(self, n):
        codes = {canonical_code(t) for t in all_labeled_tournaments(n)}
        assert codes == set(class_codes(n))

    def test_representatives_are_canonical_and_distinct(self):
        for n in range(1, 8):
            reps = enumerate_tournaments(n)
            assert len(reps) == class_count(n)
            codes = [canonical_code(t) for t in reps]
            assert len(set(codes)) == len(codes)
            assert codes == sorted(codes)

    def test_order_bounds(self):
        for bad in (0, 8):
            with pytest.raises(ValueError):
                enumerate_tournaments(bad)

    def test_invariants_survive_relabeling(self):
        # tau and nu are class invariants: spot-check representatives
        rng = random.Random(71)
        for t in rng.sample(enumerate_tournaments(6), 8):
            perm = list(range(t.n))
            rng.shuffle(perm)
            r = t.relabeled(perm)
            assert feedback_arc_set_size(r) == feedback_arc_set_size(t)
            assert max_cycle_packing(r).value == max_cycle_packing(t).value


class TestSweeps:
    def test_nu_eq_tau_upto_6(self):
        rep = verify_nu_eq_tau_upto(6)
        assert rep.ok
        assert rep.class_counts == (1, 1, 2, 4, 12, 56)
        assert rep.identity_ok
        assert rep.violations == ()

    def test_sweep_cap(self):
        with pytest.raises(ValueError, match="capped at order 6"):
            verify_nu_eq_tau_upto(7)

    def test_gap_search_at_order_7(self, paper_T7):
        found = search_counterexamples(7, "nu_lt_tau")
        assert len(found) == 2
        assert canonical_code(paper_T7) in found

    def test_gap_search_empty_below_7(self):
        assert search_counterexamples(6, "nu_lt_tau") == ()

    def test_other_predicates_empty_at_7(self):
        assert search_counterexamples(7, "mindeg_triangles_fail") == ()
        assert search_counterexamples(7, "second_neighborhood_fail") == ()

    def test_callable_predicate(self):
        odd = search_counterexamples(3, lambda t: t.arc_count() % 2 == 1)
        assert len(odd) == 2  # both order-3 classes have 3 arcs

    def test_unknown_predicate(self):
        with pytest.raises(KeyError):
            search_counterexamples(5, "no_such_predicate")

    def test_predicate_registry(self):
        assert set(PREDICATES) == {
            "nu_lt_tau",
            "mindeg_triangles_fail",
            "second_neighborhood_fail",
        }
