import pytest

from legcordial.constructors import (
    ConnectivityViolation,
    ConstructionRecipe,
    HypothesisViolation,
    balance_form,
    construct_cartesian,
    construct_corona,
    construct_corona_path,
    construct_join,
    construct_kp_tensor,
    construct_lexicographic,
    construct_strong,
    construct_tensor,
    normalize_theorem,
    run_recipe,
)
from legcordial.graph import (
    Graph,
    make_complete,
    make_cycle,
    make_path,
    make_star,
)
from legcordial.labeling import (
    AdmissionError,
    Labeling,
    identity_labeling,
    rho_eta,
)
from legcordial.numtheory import LegendreContext

from oracles import brute_tally


def verify(graph, lab, pred, p):
    """Independent re-check of every constructor postcondition."""
    assert sorted(lab.assign) == list(range(1, graph.order + 1))
    assert brute_tally(graph.edges, lab.assign, p) == (pred.e0, pred.e1)
    assert abs(pred.e0 - pred.e1) <= 1


# ---------------------------------------------------------------------------
# corona with the path on p-1 vertices
# ---------------------------------------------------------------------------

def test_corona_path_c3_p3():
    g, lab, pred = construct_corona_path(make_cycle(3), 3)
    assert g.order == 9
    assert lab.assign[6:9] == (2, 5, 8)  # host labels
    assert lab.assign[0:2] == (3, 1)  # first copy, along the path
    assert (pred.e0, pred.e1) == (6, 6)
    verify(g, lab, pred, 3)


def test_corona_path_p2_p5():
    g, lab, pred = construct_corona_path(make_path(2), 5)
    assert (pred.e0, pred.e1) == (8, 7)
    verify(g, lab, pred, 5)


def test_corona_path_rejects_wrong_prime_class():
    with pytest.raises(HypothesisViolation, match="mod 8"):
        construct_corona_path(make_cycle(3), 7)


def test_corona_path_rejects_bad_size():
    with pytest.raises(HypothesisViolation):
        construct_corona_path(make_complete(4), 3)  # size 6 outside {3, 4, 5}
    with pytest.raises(HypothesisViolation):
        construct_corona_path(make_complete(5), 5)  # size 10 outside {4, 5, 6}


def test_corona_path_rejects_disconnected():
    with pytest.raises(AdmissionError):
        construct_corona_path(Graph(4, [(0, 1), (2, 3)]), 3)


@pytest.mark.parametrize("p", [3, 5, 11, 13])
@pytest.mark.parametrize("g", [make_path(4), make_cycle(5), make_star(6)])
def test_corona_path_families(p, g):
    graph, lab, pred = construct_corona_path(g, p)
    n, q = g.order, g.size
    assert pred.e0 == n * (p - 3) // 2 + n * (p - 1) // 2 + n
    assert pred.e1 == n * (p - 1) // 2 + n * (p - 3) // 2 + q
    verify(graph, lab, pred, p)


# ---------------------------------------------------------------------------
# tensor with a complete factor
# ---------------------------------------------------------------------------

def test_kp_tensor_examples():
    g, lab, pred = construct_kp_tensor(make_path(2), 3)
    assert g.size == 6
    assert (pred.e0, pred.e1) == (3, 3)
    verify(g, lab, pred, 3)
    g, lab, pred = construct_kp_tensor(make_path(3), 3)
    assert (pred.e0, pred.e1) == (6, 6)
    verify(g, lab, pred, 3)


def test_kp_tensor_rejects_odd_cycle():
    with pytest.raises(HypothesisViolation, match="bipartite"):
        construct_kp_tensor(make_cycle(3), 3)


def test_kp_tensor_rejects_disconnected():
    with pytest.raises(AdmissionError):
        construct_kp_tensor(Graph(4, [(0, 1), (2, 3)]), 3)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize(
    "g", [make_path(4), make_cycle(4), make_cycle(6), make_star(5)]
)
def test_kp_tensor_balanced(p, g):
    graph, lab, pred = construct_kp_tensor(g, p)
    half = g.size * p * (p - 1) // 2
    assert (pred.e0, pred.e1) == (half, half)
    verify(graph, lab, pred, p)


# ---------------------------------------------------------------------------
# join
# ---------------------------------------------------------------------------

def test_join_accepts_balanced_p3_base():
    g1 = make_path(3)
    lab1 = Labeling(g1, (2, 1, 3))  # rho=1, eta=1
    g2 = make_complete(1)
    g, lab, pred = construct_join(g1, lab1, g2, identity_labeling(g2), 3)
    assert (pred.e0, pred.e1) == (3, 2)
    verify(g, lab, pred, 3)


def test_join_rejects_unbalanced_base():
    g1 = make_cycle(3)  # every labeling gives rho - eta = -1
    g2 = make_complete(1)
    with pytest.raises(HypothesisViolation) as err:
        construct_join(g1, identity_labeling(g1), g2, identity_labeling(g2), 3)
    assert err.value.lhs == -1
    assert err.value.rhs == (0, 2)


def test_join_rejects_wrong_order():
    g1 = make_path(4)  # order not a multiple of 3
    g2 = make_complete(1)
    with pytest.raises(HypothesisViolation, match="multiple of p"):
        construct_join(g1, identity_labeling(g1), g2, identity_labeling(g2), 3)


def test_join_rejects_foreign_labeling():
    g1, g2 = make_path(3), make_complete(1)
    with pytest.raises(ValueError):
        construct_join(g1, identity_labeling(make_cycle(3)), g2, identity_labeling(g2), 3)


# ---------------------------------------------------------------------------
# corona with base labelings
# ---------------------------------------------------------------------------

def test_corona_window_arithmetic():
    # order 2 host, satellite order 3, p=3: window is {1, 2, 3}
    form = balance_form("corona", make_path(2), Graph(3, [(0, 1)]), 3)
    assert (form.coef1, form.coef2) == (1, 2)
    assert (form.lo, form.hi) == (1, 3)


def test_corona_accepted_instance():
    g1 = make_path(2)
    g2 = Graph(3, [(0, 1)])
    lab2 = Labeling(g2, (1, 3, 2))  # edge sum 4 is a residue: rho - eta = 1
    g, lab, pred = construct_corona(g1, identity_labeling(g1), g2, lab2, 3)
    assert (pred.e0, pred.e1) == (5, 4)
    verify(g, lab, pred, 3)


def test_corona_rejects_wrong_satellite_order():
    g1, g2 = make_path(2), make_path(4)
    with pytest.raises(HypothesisViolation, match="multiple of p"):
        construct_corona(g1, identity_labeling(g1), g2, identity_labeling(g2), 3)


def test_corona_rejects_disconnected_host():
    g1 = Graph(4, [(0, 1), (2, 3)])
    g2 = make_path(3)
    with pytest.raises(ConnectivityViolation):
        construct_corona(g1, identity_labeling(g1), g2, identity_labeling(g2), 3)


# ---------------------------------------------------------------------------
# lexicographic
# ---------------------------------------------------------------------------

H7 = Graph(7, [(0, 6), (1, 5), (2, 4), (1, 6), (2, 5), (3, 6), (4, 5)])


def test_lexicographic_accepted_p7():
    # every edge sum of the identity labeling reduces to a residue mod 7
    lab2 = identity_labeling(H7)
    assert rho_eta(lab2, LegendreContext(7)).rho_minus_eta == 7
    g, lab, pred = construct_lexicographic(make_cycle(3), H7, lab2, 7)
    assert g.order == 21 and g.size == 168
    assert (pred.e0, pred.e1) == (84, 84)
    verify(g, lab, pred, 7)


def test_lexicographic_rejects_non_unicyclic():
    with pytest.raises(HypothesisViolation, match="size equal to its order"):
        balance_form("lexicographic", make_path(3), H7, 7)


def test_lexicographic_rejects_unbalanced():
    g2 = make_cycle(3)
    with pytest.raises(HypothesisViolation):
        construct_lexicographic(make_cycle(3), g2, identity_labeling(g2), 3)


# ---------------------------------------------------------------------------
# cartesian
# ---------------------------------------------------------------------------

def test_cartesian_c5_c4():
    g1 = make_cycle(5)
    lab1 = Labeling(g1, (2, 1, 3, 5, 4))  # rho=3, eta=2
    g, lab, pred = construct_cartesian(g1, lab1, make_cycle(4), 5)
    assert (pred.e0, pred.e1) == (20, 20)
    verify(g, lab, pred, 5)


def test_cartesian_rejects_non_integral_k():
    g1 = make_cycle(5)
    lab1 = Labeling(g1, (2, 1, 3, 5, 4))
    with pytest.raises(HypothesisViolation, match="integer multiple"):
        construct_cartesian(g1, lab1, make_path(3), 5)


def test_cartesian_same_base_other_cycle():
    # the C5 base labeling also serves g2 = C3 (k = 1); difference stays 0
    g1 = make_cycle(5)
    lab1 = Labeling(g1, (2, 1, 3, 5, 4))
    g, lab, pred = construct_cartesian(g1, lab1, make_cycle(3), 5)
    assert pred.e0 == pred.e1 == 15
    verify(g, lab, pred, 5)


def test_cartesian_degenerate_k0():
    g1 = make_path(3)
    lab1 = Labeling(g1, (2, 1, 3))  # rho = eta = 1, target m*k = 0
    g, lab, pred = construct_cartesian(g1, lab1, make_complete(1), 3)
    assert g.order == 3 and g.size == 2
    assert (pred.e0, pred.e1) == (1, 1)
    verify(g, lab, pred, 3)


# ---------------------------------------------------------------------------
# tensor
# ---------------------------------------------------------------------------

def test_tensor_p3_c3():
    g1 = make_path(3)
    lab1 = Labeling(g1, (2, 1, 3))
    g, lab, pred = construct_tensor(g1, lab1, make_cycle(3), 3)
    assert g.size == 12
    assert (pred.e0, pred.e1) == (6, 6)
    verify(g, lab, pred, 3)


def test_tensor_rejects_unbalanced_c3():
    g1 = make_cycle(3)
    with pytest.raises(HypothesisViolation):
        construct_tensor(g1, identity_labeling(g1), make_cycle(3), 3)


def test_tensor_rejects_bipartite_pair():
    g1 = make_path(3)
    lab1 = Labeling(g1, (2, 1, 3))
    with pytest.raises(ConnectivityViolation):
        construct_tensor(g1, lab1, make_cycle(4), 3)


# ---------------------------------------------------------------------------
# strong
# ---------------------------------------------------------------------------

def strong_formula(n, rho1, eta1, p):
    base = 3 * (p - 1) // 2 * (n - 1)
    e0 = n * eta1 + base + 3 * (n - 1) + 2 * eta1 * (n - 1)
    e1 = n * rho1 + base + 2 * rho1 * (n - 1)
    return e0, e1


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("eta1", range(0, 6))
def test_strong_difference_is_always_one(n, eta1):
    e0, e1 = strong_formula(n, eta1 + 1, eta1, 3)
    assert e1 - e0 == 1


def test_strong_c9_p4():
    g1 = make_cycle(9)
    # find a base labeling with rho - eta = 1 by a tiny local scan
    from legcordial.search import DiffWindow, SearchSpec, search_labeling

    res = search_labeling(SearchSpec(g1, 3, objective=DiffWindow.exact(1)))
    assert res.outcome == "found"
    lab1 = Labeling(g1, res.labeling)
    g, lab, pred = construct_strong(g1, lab1, make_path(4), 3)
    assert (pred.e0, pred.e1) == (58, 59)
    verify(g, lab, pred, 3)


def test_strong_rejects_non_tree():
    g1 = make_cycle(9)
    with pytest.raises(HypothesisViolation, match="tree"):
        balance_form("strong", g1, make_cycle(4), 3)


def test_strong_rejects_wrong_order():
    with pytest.raises(HypothesisViolation, match="3\\*p"):
        balance_form("strong", make_cycle(6), make_path(2), 3)


# ---------------------------------------------------------------------------
# recipe plumbing
# ---------------------------------------------------------------------------

def test_normalize_theorem():
    assert normalize_theorem("LEX") == "lexicographic"
    assert normalize_theorem("cart") == "cartesian"
    assert normalize_theorem("corona-path") == "corona-path"
    with pytest.raises(ValueError):
        normalize_theorem("unknown")


def test_run_recipe_round_trips():
    recipe = ConstructionRecipe("corona-path", 3, make_cycle(3), None)
    g, lab, pred = run_recipe(recipe)
    assert (pred.e0, pred.e1) == (6, 6)
    recipe = ConstructionRecipe("kp-tensor", 3, None, make_path(2))
    g, lab, pred = run_recipe(recipe)
    assert (pred.e0, pred.e1) == (3, 3)
    recipe = ConstructionRecipe(
        "join", 3, make_path(3), make_complete(1), lab_g1=(2, 1, 3), lab_g2=(1,)
    )
    g, lab, pred = run_recipe(recipe)
    assert (pred.e0, pred.e1) == (3, 2)
    with pytest.raises(ValueError):
        run_recipe(ConstructionRecipe("join", 3, make_path(3), make_complete(1)))
