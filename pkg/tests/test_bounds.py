import math
import random

import pytest

from sumcross import (
    ArcGraph,
    Edge,
    IntegerSet,
    build_sum_graph,
    check_bipartite_crossing,
    check_crossing_lower,
    check_crossing_upper,
    check_degree_weighted_crossing,
    check_doubling_lower,
    check_energy_lower,
    check_heavy_subset,
    check_intersection_lower,
    check_level_set_count,
    check_multiplicity_lower,
    check_sumset_lower,
    coprime_construction,
    count_crossings_fast,
    reports_to_jsonable,
    representation_profile,
    run_all_checks,
    sidon_seed_construction,
    sumset,
    REFERENCE_SEED,
    REFERENCE_TOUR,
)
from helpers import (
    random_dcd_set,
    random_doubling_dcd_set,
    random_integer_set,
)


def iset(*values):
    return IntegerSet.of(values)


def dense_bipartite_instance():
    # dcd set with small gaps plus a long unit progression: the sum graph
    # is an interval of vertices and the even/odd split has enough cross
    # edges to meet the e >= 6 max(|U|,|V|) hypothesis
    rng = random.Random(7)
    gaps = list(range(1, 12))
    rng.shuffle(gaps)
    acc = [0]
    for g in gaps:
        acc.append(acc[-1] + g)
    A = IntegerSet(tuple(acc))
    B = IntegerSet(tuple(range(300)))
    return build_sum_graph(A, B)


class TestSumsetLower:
    def test_tiny_cases(self):
        r = check_sumset_lower(iset(0, 1), iset(0, 1))
        assert r.mode == "assert" and r.satisfied
        assert r.lhs == 3 and r.rhs == pytest.approx(2 * math.sqrt(2 / 27))
        r = check_sumset_lower(iset(0, 1, 3), iset(0, 1, 3))
        assert r.satisfied and r.lhs == 6 and r.rhs == pytest.approx(1.0)

    def test_coprime_instance_ratio(self):
        A, B, _ = coprime_construction(1)
        r = check_sumset_lower(A, B)
        assert r.mode == "assert" and r.satisfied
        plain_ratio = r.lhs / (len(A) * math.sqrt(len(B)))
        assert plain_ratio <= 15  # evidence the general bound is near-tight here

    def test_non_dcd_demotes_to_report(self):
        r = check_sumset_lower(iset(0, 1, 2), iset(0, 5))
        assert r.mode == "report"
        assert r.context["preconditionDcd"] is False

    def test_verdict_matches_squared_out_form(self):
        rng = random.Random(31)
        for _ in range(20):
            A = random_integer_set(rng, rng.randint(1, 15), 0, 200)
            B = random_integer_set(rng, rng.randint(1, 15), 0, 200)
            r = check_sumset_lower(A, B)
            s = len(sumset(A, B))
            assert r.satisfied == (27 * s * s >= len(A) ** 2 * len(B))


class TestCrossingUpper:
    def test_single_translate(self):
        r = check_crossing_upper(iset(0, 1, 3), iset(4))
        assert r.satisfied and r.context["crossings"] == 0

    def test_small_example(self):
        r = check_crossing_upper(iset(0, 1, 3), iset(0, 1))
        assert r.satisfied
        assert r.context["crossings"] == 1
        assert r.context["sharpBound"] == 5  # C(2,2) * (2*3-1)
        assert r.lhs == 12  # |B|^2 |A|

    def test_random_dcd_instances(self):
        rng = random.Random(13)
        for _ in range(30):
            A = random_dcd_set(rng, rng.randint(2, 15))
            B = random_integer_set(rng, rng.randint(1, 15), 0, 400)
            r = check_crossing_upper(A, B)
            assert r.mode == "assert" and r.satisfied


class TestCrossingLower:
    def test_small_example(self):
        r = check_crossing_lower(iset(0, 1, 3), iset(0, 1))
        assert r.mode == "report" and r.satisfied
        assert r.lhs == 1
        assert r.rhs == pytest.approx(64 / (27 * 25))

    def test_single_translate_edge_regime_recorded_not_asserted(self):
        r = check_crossing_lower(iset(0, 1, 3, 7, 12), iset(3))
        assert r.mode == "report"
        assert r.lhs == 0 and r.rhs > 0 and not r.satisfied

    def test_coprime_instance_reports_both_sides(self):
        A, B, _ = coprime_construction(1)
        r = check_crossing_lower(A, B)
        assert r.mode == "report"
        assert r.lhs >= 0 and r.rhs > 0 and r.ratio is not None


class TestDegreeWeightedCrossing:
    def test_small_graphs_trivially_satisfied(self):
        g = build_sum_graph(iset(0, 1, 3), iset(0, 1, 3))
        r = check_degree_weighted_crossing(g)
        assert r.satisfied and r.rhs < 0

    def test_edgeless(self):
        g = ArcGraph(tuple(range(5)), ())
        r = check_degree_weighted_crossing(g)
        assert r.satisfied and r.lhs == 0

    def test_rejects_multigraphs(self):
        g = build_sum_graph(iset(0, 1, 2), iset(0, 1))
        with pytest.raises(ValueError):
            check_degree_weighted_crossing(g)

    def test_large_dense_instance(self):
        A = sidon_seed_construction(REFERENCE_SEED, 1, tour=REFERENCE_TOUR)
        g = build_sum_graph(A, A)
        r = check_degree_weighted_crossing(g)
        assert r.mode == "assert" and r.satisfied


class TestBipartiteCrossing:
    def test_sparse_split_reports(self):
        g = build_sum_graph(iset(0, 1, 3), iset(0, 1))
        r = check_bipartite_crossing(g, range(0, g.num_vertices, 2))
        assert r.mode == "report"

    def test_single_cross_edge(self):
        g = ArcGraph(tuple(range(4)), (Edge(0, 1),))
        r = check_bipartite_crossing(g, {0})
        assert r.mode == "report" and r.lhs == 0

    def test_everything_on_one_side(self):
        g = ArcGraph(tuple(range(4)), (Edge(0, 1), Edge(1, 3)))
        r = check_bipartite_crossing(g, range(4))
        assert r.context["crossEdges"] == 0 and r.satisfied

    def test_hypothesis_satisfied_dense_instance(self):
        g = dense_bipartite_instance()
        r = check_bipartite_crossing(g, range(0, g.num_vertices, 2))
        assert r.mode == "assert" and r.satisfied
        assert r.context["hypothesisMet"]

    def test_rejects_bad_indices(self):
        g = ArcGraph(tuple(range(4)), (Edge(0, 1),))
        with pytest.raises(ValueError):
            check_bipartite_crossing(g, {9})


class TestEnergyLower:
    def test_small_example(self):
        r = check_energy_lower(iset(0, 1, 3), iset(0, 1, 3))
        e15 = 3 + 3 * 2**1.5
        assert r.mode == "report"
        assert r.lhs == 6
        assert r.rhs == pytest.approx(e15 ** (2 / 3))
        assert r.ratio == pytest.approx(6 / e15 ** (2 / 3))

    def test_translate_invariance(self):
        a = iset(0, 1, 3)
        r1 = check_energy_lower(a, a)
        r2 = check_energy_lower(a, iset(10, 11, 13))
        assert (r1.lhs, r1.rhs, r1.ratio) == (r2.lhs, r2.rhs, r2.ratio)

    def test_rejects_unequal_sizes(self):
        with pytest.raises(ValueError):
            check_energy_lower(iset(0, 1), iset(0, 1, 2))

    def test_ratios_finite_across_random_instances(self):
        rng = random.Random(17)
        for _ in range(20):
            n = rng.randint(2, 40)
            A = random_dcd_set(rng, n)
            B = random_integer_set(rng, n, 0, 2000)
            r = check_energy_lower(A, B)
            assert r.ratio is not None and math.isfinite(r.ratio)


class TestHeavySubset:
    def test_hand_checked_singleton(self):
        r = check_heavy_subset(iset(0, 1), iset(0, 1), iset(1))
        assert r.mode == "assert" and r.satisfied
        assert r.lhs == 3 and r.rhs == pytest.approx(0.125)
        assert r.context["delta"] == pytest.approx(2.0)

    def test_full_sumset_consistent_with_main_bound(self):
        rng = random.Random(19)
        for _ in range(25):
            A = random_dcd_set(rng, rng.randint(2, 20))
            B = random_integer_set(rng, rng.randint(1, 20), 0, 500)
            full = sumset(A, B)
            heavy = check_heavy_subset(A, B, full)
            main = check_sumset_lower(A, B)
            assert heavy.satisfied and main.satisfied

    def test_top_singleton_across_random_instances(self):
        rng = random.Random(21)
        for _ in range(25):
            A = random_dcd_set(rng, rng.randint(2, 20))
            B = random_integer_set(rng, rng.randint(1, 20), 0, 500)
            profile = representation_profile(A, B)
            top = max(profile.counts, key=lambda x: (profile.counts[x], -x))
            r = check_heavy_subset(A, B, iset(top), profile=profile)
            assert r.satisfied and r.ratio is not None

    def test_rejects_foreign_subset(self):
        with pytest.raises(ValueError):
            check_heavy_subset(iset(0, 1), iset(0, 1), iset(7))

    def test_records_second_case_hypothesis(self):
        r = check_heavy_subset(iset(0, 1), iset(0, 1), iset(1))
        assert "secondCaseHypothesisHeld" in r.context


class TestLevelSetCount:
    def test_hand_checked(self):
        r = check_level_set_count(iset(0, 1), iset(0, 1), 2)
        assert r.mode == "assert" and r.satisfied
        assert r.lhs == 1
        assert r.rhs == pytest.approx(3 * math.sqrt(6) * 2 / 2**1.5)

    def test_above_max_multiplicity(self):
        r = check_level_set_count(iset(0, 1), iset(0, 1), 5)
        assert r.lhs == 0 and r.satisfied

    def test_t_validation(self):
        with pytest.raises(ValueError):
            check_level_set_count(iset(0, 1), iset(0, 1), 1)

    def test_all_levels_on_random_instances(self):
        rng = random.Random(23)
        for _ in range(20):
            A = random_dcd_set(rng, rng.randint(2, 25))
            B = random_integer_set(rng, rng.randint(2, 25), 0, 300)
            profile = representation_profile(A, B)
            for t in range(2, profile.max_multiplicity() + 1):
                assert check_level_set_count(A, B, t, profile=profile).satisfied


class TestMultiplicityLower:
    def test_progression_ratio_recorded(self):
        A = iset(*range(12))
        r = check_multiplicity_lower(A, A)
        assert r.mode == "report"
        assert r.context["multiplicity"] == 11
        assert r.ratio is not None

    def test_dcd_reduces_to_main_shape(self):
        rng = random.Random(27)
        for _ in range(15):
            A = random_dcd_set(rng, rng.randint(2, 20))
            B = random_integer_set(rng, rng.randint(1, 20), 0, 500)
            r = check_multiplicity_lower(A, B)
            assert r.context["multiplicity"] == 1
            assert r.ratio >= 1 / math.sqrt(27)

    def test_singleton_b_ratio_is_sqrt_multiplicity(self):
        A = iset(0, 1, 2, 3)
        r = check_multiplicity_lower(A, iset(9))
        assert r.ratio == pytest.approx(math.sqrt(3))


class TestIntersectionLower:
    def test_sparse_graph_reports(self):
        g = build_sum_graph(iset(0, 1, 3), iset(0, 1))
        r = check_intersection_lower(g)
        assert r.mode == "report"

    def test_edgeless(self):
        g = ArcGraph(tuple(range(4)), ())
        r = check_intersection_lower(g)
        assert r.mode == "report" and r.lhs == 0

    def test_hypothesis_satisfied_dense_instance(self):
        A = sidon_seed_construction(REFERENCE_SEED, 1, tour=REFERENCE_TOUR)
        g = build_sum_graph(A, A)
        assert 4 * g.num_edges >= 9 * g.num_vertices
        r = check_intersection_lower(g)
        assert r.mode == "assert" and r.satisfied

    def test_multigraph_never_asserted(self):
        # parallel unit intervals meet the edge-density hypothesis but have
        # intersection number zero, so they must stay report-only
        g = build_sum_graph(iset(*range(0, 90, 3)), iset(*range(0, 30, 3)))
        r = check_intersection_lower(g)
        assert r.mode == "report" and not r.satisfied


class TestDoublingLower:
    def test_hand_checked(self):
        r = check_doubling_lower(iset(0, 2, 5), iset(0, 1))
        assert r.mode == "assert" and r.satisfied
        assert r.lhs == 6
        assert r.rhs == pytest.approx(2 / (3 * math.sqrt(3)) * 3 * math.sqrt(2))

    def test_singleton_b(self):
        r = check_doubling_lower(iset(0, 2, 5), iset(4))
        assert r.satisfied and r.lhs == 3

    def test_precondition_violation_reports(self):
        r = check_doubling_lower(iset(0, 1, 4), iset(0, 1))
        assert r.mode == "report"
        assert r.context["preconditionDoublingDcd"] is False

    def test_gap_window_instances(self):
        rng = random.Random(29)
        for _ in range(25):
            A = random_doubling_dcd_set(rng, rng.randint(2, 25))
            B = random_integer_set(rng, rng.randint(1, 25), 0, 800)
            r = check_doubling_lower(A, B)
            assert r.mode == "assert" and r.satisfied


class TestSuiteRunner:
    def test_coprime_instance_passes_all_asserts(self):
        A, B, _ = coprime_construction(1)
        reports = run_all_checks(A, B)
        assert all(r.satisfied for r in reports if r.mode == "assert")
        names = {r.name for r in reports}
        assert "sumset_lower_ge" in names and "crossing_upper_ge" in names

    def test_reports_sorted_and_serializable(self):
        A, B, _ = coprime_construction(1)
        reports = run_all_checks(A, B)
        payload = reports_to_jsonable(reports)
        import json
        text = json.dumps(payload)
        assert text == json.dumps(reports_to_jsonable(run_all_checks(A, B)))
        keys = [list(entry) for entry in payload]
        assert all(k == ["name", "lhs", "rhs", "mode", "satisfied", "ratio",
                         "context"] for k in keys)

    def test_oracle_gate_skips_quadratic_checks(self):
        A, B, _ = coprime_construction(1)
        reports = run_all_checks(A, B, oracle_edge_limit=10)
        names = {r.name for r in reports}
        assert "intersection_lower_ge" not in names
        assert "bipartite_crossing_ge" not in names

    def test_singleton_a(self):
        reports = run_all_checks(iset(5), iset(0, 1))
        assert all(r.satisfied for r in reports if r.mode == "assert")
