from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legcordial.constructors import ConnectivityViolation, HypothesisViolation, run_recipe
from legcordial.graph import Graph, make_complete, make_cycle, make_path, make_star
from legcordial.labeling import Labeling, rho_eta
from legcordial.numtheory import LegendreContext
from legcordial.search import (
    Budget,
    DiffWindow,
    SearchSpec,
    achievable_differences,
    find_base_labelings,
    search_labeling,
)

from oracles import brute_cordial_count, brute_diff_witnesses, brute_tally


def test_c3_always_cordial():
    res = search_labeling(SearchSpec(make_cycle(3), 3))
    assert res.outcome == "found"
    res = search_labeling(SearchSpec(make_cycle(3), 3, mode="count-all"))
    assert res.count == 6 and res.complete


def test_k4_has_no_cordial_labeling_mod3():
    res = search_labeling(SearchSpec(make_complete(4), 3, mode="prove-none"))
    assert res.outcome == "none"
    assert res.complete


def test_c5_target_difference():
    res = search_labeling(SearchSpec(make_cycle(5), 5, objective=DiffWindow.exact(1)))
    assert res.outcome == "found"
    parts = rho_eta(Labeling(make_cycle(5), res.labeling), LegendreContext(5))
    assert parts.rho_minus_eta == 1
    # the documented witness class member
    parts = rho_eta(Labeling(make_cycle(5), (2, 1, 3, 5, 4)), LegendreContext(5))
    assert parts.rho_minus_eta == 1


def test_found_labeling_satisfies_objective():
    for g, p in [(make_path(4), 3), (make_star(5), 5), (make_cycle(6), 3)]:
        res = search_labeling(SearchSpec(g, p))
        if res.outcome == "found":
            e0, e1 = brute_tally(g.edges, res.labeling, p)
            assert abs(e0 - e1) <= 1


@pytest.mark.parametrize(
    "g,p",
    [
        (make_path(4), 3),
        (make_cycle(5), 5),
        (make_star(5), 3),
        (make_complete(4), 3),
        (make_cycle(6), 3),
        (make_path(7), 5),
    ],
)
def test_count_all_matches_naive_enumeration(g, p):
    res = search_labeling(SearchSpec(g, p, mode="count-all"))
    assert res.complete
    assert res.count == brute_cordial_count(g.edges, g.order, p)


@st.composite
def tiny_connected_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    spanning = [(i, draw(st.integers(min_value=0, max_value=i - 1))) for i in range(1, n)]
    pool = list(combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return Graph(n, spanning + list(extra))


@given(tiny_connected_graphs(), st.sampled_from([3, 5]))
@settings(max_examples=40, deadline=None)
def test_pruning_is_sound(g, p):
    """Pruned search and naive enumeration agree on the satisfiability verdict."""
    res = search_labeling(SearchSpec(g, p, mode="count-all"))
    assert res.complete
    assert res.count == brute_cordial_count(g.edges, g.order, p)


def test_determinism():
    spec = SearchSpec(make_cycle(6), 3, objective=DiffWindow.around(1))
    a = search_labeling(spec)
    b = search_labeling(spec)
    assert a == b


def test_budget_exhaustion_is_distinct():
    res = search_labeling(
        SearchSpec(make_complete(4), 3, mode="prove-none", budget=Budget(max_nodes=5))
    )
    assert res.outcome == "exhausted"
    assert not res.complete
    assert res.nodes <= 6


def test_order_ceiling():
    with pytest.raises(ValueError, match="ceiling"):
        SearchSpec(make_path(13), 3)
    SearchSpec(make_path(13), 3, ceiling=13)


def test_parallel_matches_sequential():
    for mode in ("find-first", "count-all", "prove-none"):
        seq = search_labeling(SearchSpec(make_cycle(6), 3, mode=mode))
        par = search_labeling(SearchSpec(make_cycle(6), 3, mode=mode, jobs=3))
        assert seq.outcome == par.outcome
        assert seq.labeling == par.labeling
        assert seq.count == par.count


def test_achievable_differences_matches_oracle():
    for g, p in [(make_path(4), 3), (make_cycle(5), 5)]:
        got, complete, _ = achievable_differences(g, p)
        assert complete
        want = brute_diff_witnesses(g.edges, g.order, p)
        assert set(got) == set(want)
        for d, assign in got.items():
            e0, e1 = brute_tally(g.edges, assign, p)
            assert e1 - e0 == d


def test_search_report_json():
    res = search_labeling(SearchSpec(make_cycle(3), 3, mode="count-all"))
    obj = res.to_json()
    assert obj["outcome"] == "found" and obj["count"] == 6 and "nodes" in obj


# ---------------------------------------------------------------------------
# find_base_labelings
# ---------------------------------------------------------------------------

def test_fbl_cartesian_c5_c4():
    out = find_base_labelings("cartesian", make_cycle(5), make_cycle(4), 5)
    assert out.outcome == "found"
    parts = rho_eta(
        Labeling(make_cycle(5), out.recipe.lab_g1), LegendreContext(5)
    )
    assert parts.rho_minus_eta == 1
    g, lab, pred = run_recipe(out.recipe)
    assert (pred.e0, pred.e1) == (20, 20)


def test_fbl_tensor_c3_exhausts():
    out = find_base_labelings("tensor", make_cycle(3), make_cycle(4), 3)
    assert out.outcome == "none"


def test_fbl_lexicographic_p3_m1_is_infeasible_for_all_g2():
    # every graph on 3 labeled vertices, all 6 labelings each
    pool = list(combinations(range(3), 2))
    for r in range(len(pool) + 1):
        for chosen in combinations(pool, r):
            out = find_base_labelings(
                "lexicographic", make_cycle(3), Graph(3, chosen), 3
            )
            assert out.outcome == "none", chosen


def test_fbl_join_examples():
    out = find_base_labelings("join", make_cycle(3), make_complete(1), 3)
    assert out.outcome == "none"  # rho-eta of C3 is -1 for all labelings
    out = find_base_labelings("join", make_path(3), make_complete(1), 3)
    assert out.outcome == "found"
    g, lab, pred = run_recipe(out.recipe)
    assert (pred.e0, pred.e1) == (3, 2)


def test_fbl_corona_found_and_none():
    out = find_base_labelings("corona", make_path(2), Graph(3, [(0, 1)]), 3)
    assert out.outcome == "found"
    g, lab, pred = run_recipe(out.recipe)
    assert abs(pred.e0 - pred.e1) <= 1
    out = find_base_labelings("corona", make_path(2), make_cycle(3), 3)
    assert out.outcome == "none"


def test_fbl_structural_precondition_fails_before_search():
    with pytest.raises(HypothesisViolation):
        find_base_labelings("join", make_path(4), make_complete(1), 3)
    with pytest.raises(ConnectivityViolation):
        find_base_labelings("tensor", make_path(4), make_cycle(4), 3)
    with pytest.raises(ValueError):
        find_base_labelings("corona-path", make_path(4), make_complete(1), 3)


def test_fbl_budget_exhaustion():
    out = find_base_labelings(
        "cartesian", make_cycle(5), make_cycle(4), 5, budget=Budget(max_nodes=3)
    )
    assert out.outcome == "exhausted"
