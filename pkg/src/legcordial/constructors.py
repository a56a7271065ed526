"""Constructive cordial labelers for graphs built by graph operations.

Each constructor validates its hypotheses, builds the composite graph, emits
an explicit vertex labeling, and predicts the induced edge counts (e0, e1)
in closed form. The prediction is then checked against the verifier; any
mismatch raises ConstructionError rather than a warning, because the closed
form is the whole point of the construction. On rejected input no labeling
is attempted.

The eight constructions and their hypotheses:

  corona-path    g connected, order n >= 2, size in {n-1, n, n+1};
                 p = +-3 (mod 8). Builds g o P_{p-1}.
  kp-tensor      g connected bipartite, order >= 2. Builds K_p x g.
  join           |V(g1)| = n*p; d1 + d2 in [nm-1, nm+1] where m = |V(g2)|
                 and d_i = |rho_i| - |eta_i| of the base labelings.
  corona         g1 connected, |V(g2)| = m*p; d1 + n*d2 in [nm-1, nm+1].
  lexicographic  g1 connected with size = order = n (unicyclic);
                 |V(g2)| = m*p; d2 = m^2 * p exactly.
  cartesian      both connected, |V(g1)| = m*p, |E(g2)| = k * |V(g2)|;
                 d1 = m*k exactly.
  tensor         both connected, one factor has an odd cycle,
                 |V(g1)| = n*p; d1 = 0 exactly.
  strong         both connected, |V(g1)| = 3*p, g2 a tree; d1 = 1 exactly.

For the strong construction the tree requirement is read off the second
factor (its size must be its order minus one); the first factor's size is
unconstrained. The tensor and lexicographic block offsets are the full
order of the repeated factor (n*p per copy, resp. m*p per block): both are
multiples of p, so every congruence the counting argument needs is
preserved while the assignment stays bijective for all factor orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    bipartition,
    has_odd_cycle,
    is_connected,
    make_complete,
    make_path,
)
from .labeling import (
    AdmissionError,
    Labeling,
    induced_tally,
    rho_eta,
)
from .numtheory import LegendreContext
from .products import (
    cartesian as cartesian_product,
    corona as corona_product,
    corona_copy_index,
    corona_host_index,
    join as join_product,
    lexicographic as lexicographic_product,
    pair_index,
    strong as strong_product,
    tensor as tensor_product,
)

THEOREMS = (
    "corona-path",
    "kp-tensor",
    "join",
    "corona",
    "lexicographic",
    "cartesian",
    "tensor",
    "strong",
)

_ALIASES = {
    "lex": "lexicographic",
    "cart": "cartesian",
    "coronapath": "corona-path",
    "corona_path": "corona-path",
    "kptensor": "kp-tensor",
    "kp_tensor": "kp-tensor",
    "tensor-kp": "kp-tensor",
}

# Theorems whose hypotheses constrain base-labeling statistics (rho/eta).
BALANCE_THEOREMS = ("join", "corona", "lexicographic", "cartesian", "tensor", "strong")


def normalize_theorem(name: str) -> str:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in THEOREMS:
        raise ValueError(f"unknown construction {name!r}; choose from {', '.join(THEOREMS)}")
    return key


class HypothesisViolation(Exception):
    """A construction hypothesis failed; carries the evaluated sides."""

    def __init__(self, condition: str, lhs=None, rhs=None):
        self.condition = condition
        self.lhs = lhs
        self.rhs = rhs
        detail = condition
        if lhs is not None or rhs is not None:
            detail += f" (got {lhs}, required {rhs})"
        super().__init__(detail)


class ConnectivityViolation(HypothesisViolation):
    """A connectivity / odd-cycle hypothesis failed."""


class ConstructionError(RuntimeError):
    """The verifier disagreed with the closed-form prediction."""


@dataclass(frozen=True)
class PredictedTally:
    e0: int
    e1: int


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    satisfied: bool
    detail: str = ""


@dataclass(frozen=True)
class ConstructionRecipe:
    """Everything needed to reproduce one construction."""

    theorem: str
    p: int
    g1: Graph | None
    g2: Graph | None
    lab_g1: tuple[int, ...] | None = None
    lab_g2: tuple[int, ...] | None = None
    checks: tuple[HypothesisCheck, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class BalanceForm:
    """Hypothesis equation coef1*d1 + coef2*d2 in [lo, hi] on rho-minus-eta values.

    coef_i = 0 means factor i carries no base labeling in that construction.
    params holds the derived hypothesis constants (n, m, k) for reporting.
    """

    coef1: int
    coef2: int
    lo: int
    hi: int
    params: dict


def _require_odd_prime(p: int) -> LegendreContext:
    return LegendreContext(p)  # validates primality, oddness and the size cap


def _require_multiple(order: int, p: int, what: str) -> int:
    if order % p != 0:
        raise HypothesisViolation(
            f"{what} must be a multiple of p={p}", lhs=order, rhs=f"k*{p}"
        )
    return order // p


def balance_form(theorem: str, g1: Graph, g2: Graph, p: int) -> BalanceForm:
    """Structural gates plus the hypothesis window for the six balance theorems.

    Raises ConnectivityViolation / HypothesisViolation when a structural
    precondition fails, before any labeling statistics are consulted.
    """
    theorem = normalize_theorem(theorem)
    _require_odd_prime(p)
    if theorem == "join":
        n = _require_multiple(g1.order, p, "order of g1")
        m = g2.order
        return BalanceForm(1, 1, n * m - 1, n * m + 1, {"n": n, "m": m})
    if theorem == "corona":
        if not is_connected(g1):
            raise ConnectivityViolation("g1 must be connected")
        m = _require_multiple(g2.order, p, "order of g2")
        n = g1.order
        return BalanceForm(1, n, n * m - 1, n * m + 1, {"n": n, "m": m})
    if theorem == "lexicographic":
        if not is_connected(g1):
            raise ConnectivityViolation("g1 must be connected")
        if g1.size != g1.order:
            raise HypothesisViolation(
                "g1 must have size equal to its order", lhs=g1.size, rhs=g1.order
            )
        m = _require_multiple(g2.order, p, "order of g2")
        target = m * m * p
        return BalanceForm(0, 1, target, target, {"n": g1.order, "m": m})
    if theorem == "cartesian":
        if not (is_connected(g1) and is_connected(g2)):
            raise ConnectivityViolation("both factors must be connected")
        m = _require_multiple(g1.order, p, "order of g1")
        n = g2.order
        if g2.size % n != 0:
            raise HypothesisViolation(
                "size of g2 must be an integer multiple of its order",
                lhs=g2.size,
                rhs=f"k*{n}",
            )
        k = g2.size // n
        return BalanceForm(1, 0, m * k, m * k, {"n": n, "m": m, "k": k})
    if theorem == "tensor":
        if not (is_connected(g1) and is_connected(g2)):
            raise ConnectivityViolation("both factors must be connected")
        if g1.order < 2 or g2.order < 2:
            raise ConnectivityViolation(
                "a one-vertex factor gives an edgeless, disconnected product"
            )
        if not (has_odd_cycle(g1) or has_odd_cycle(g2)):
            raise ConnectivityViolation(
                "at least one factor must contain an odd cycle"
            )
        n = _require_multiple(g1.order, p, "order of g1")
        return BalanceForm(1, 0, 0, 0, {"n": n, "m": g2.order})
    if theorem == "strong":
        if not (is_connected(g1) and is_connected(g2)):
            raise ConnectivityViolation("both factors must be connected")
        if g1.order != 3 * p:
            raise HypothesisViolation(
                "order of g1 must equal 3*p", lhs=g1.order, rhs=3 * p
            )
        n = g2.order
        if g2.size != n - 1:
            raise HypothesisViolation(
                "g2 must be a tree (size = order - 1)", lhs=g2.size, rhs=n - 1
            )
        return BalanceForm(1, 0, 1, 1, {"n": n})
    raise ValueError(f"{theorem} carries no balance hypothesis")


def _check_base_labeling(lab: Labeling, g: Graph, which: str) -> None:
    if lab.graph != g:
        raise ValueError(f"base labeling {which} does not belong to its factor graph")


def _check_balance(form: BalanceForm, d1: int | None, d2: int | None) -> int:
    lhs = (form.coef1 * (d1 or 0)) + (form.coef2 * (d2 or 0))
    if not form.lo <= lhs <= form.hi:
        raise HypothesisViolation(
            "balance hypothesis on rho-minus-eta statistics",
            lhs=lhs,
            rhs=(form.lo, form.hi),
        )
    return lhs


def _finalize(
    composite: Graph, assign: list[int], ctx: LegendreContext, e0: int, e1: int
) -> tuple[Graph, Labeling, PredictedTally]:
    lab = Labeling(composite, tuple(assign))  # rejects non-bijections
    tally = induced_tally(lab, ctx)
    if (tally.e0, tally.e1) != (e0, e1):
        raise ConstructionError(
            f"verifier tally ({tally.e0},{tally.e1}) != predicted ({e0},{e1})"
        )
    if abs(e0 - e1) > 1:
        raise ConstructionError(f"prediction ({e0},{e1}) is not cordial")
    return composite, lab, PredictedTally(e0, e1)


# ---------------------------------------------------------------------------
# Constructions without base labelings
# ---------------------------------------------------------------------------

def construct_corona_path(g: Graph, p: int) -> tuple[Graph, Labeling, PredictedTally]:
    """Corona of a sparse connected graph with the path on p-1 vertices.

    Hosts take labels (p+1)/2 + p*(i-1); within copy i the path vertices get
    j + (p+1)/2 + p*(i-1) along the first half and j - (p-1)/2 + p*(i-1)
    along the second, so consecutive path sums sweep every residue except 2
    and 0, and p = +-3 (mod 8) makes 2 a nonresidue. Predicted counts:
    e0 = n(p-3)/2 + n(p-1)/2 + n and e1 = n(p-1)/2 + n(p-3)/2 + q.
    """
    ctx = _require_odd_prime(p)
    if p % 8 not in (3, 5):
        raise HypothesisViolation(
            "requires (2/p) = -1, i.e. p = +-3 (mod 8)", lhs=p % 8, rhs="3 or 5"
        )
    if not is_connected(g):
        raise AdmissionError("base graph must be connected")
    n, q = g.order, g.size
    if n < 2:
        raise HypothesisViolation("base graph must have order >= 2", lhs=n, rhs=">= 2")
    if q not in (n - 1, n, n + 1):
        raise HypothesisViolation(
            "base graph size must lie in {n-1, n, n+1}",
            lhs=q,
            rhs=(n - 1, n + 1),
        )
    copy_order = p - 1
    composite = corona_product(g, make_path(copy_order))
    assign = [0] * composite.order
    half_up = (p + 1) // 2
    half_dn = (p - 1) // 2
    for i in range(n):  # copy index, 0-based
        block = p * i
        for j in range(1, p):  # path position, 1-based
            lab = j + half_up if j <= half_dn else j - half_dn
            assign[corona_copy_index(i, j - 1, copy_order)] = lab + block
        assign[corona_host_index(i, n, copy_order)] = half_up + block
    e0 = n * (p - 3) // 2 + n * (p - 1) // 2 + n
    e1 = n * (p - 1) // 2 + n * (p - 3) // 2 + q
    return _finalize(composite, assign, ctx, e0, e1)


def construct_kp_tensor(g: Graph, p: int) -> tuple[Graph, Labeling, PredictedTally]:
    """Tensor product of the complete graph on p vertices with a bipartite graph.

    Vertices over side 1 are labeled ascending within their block, side-2
    blocks descending with the top slot reserved for t = p; every edge class
    then meets each nonzero residue equally often, giving
    e0 = e1 = m*p*(p-1)/2 where m is the size of g.
    """
    ctx = _require_odd_prime(p)
    if not is_connected(g):
        raise AdmissionError("factor graph must be connected")
    if g.order < 2:
        raise HypothesisViolation(
            "factor graph must have order >= 2", lhs=g.order, rhs=">= 2"
        )
    sides = bipartition(g)
    if sides is None:
        raise HypothesisViolation("factor graph must be bipartite (no odd cycle)")
    side1 = sorted(sides.side(1))
    side2 = sorted(sides.side(2))
    composite = tensor_product(make_complete(p), g)
    assign = [0] * composite.order
    n_g = g.order
    r1 = len(side1)
    for s1, u in enumerate(side1):  # 0-based block index
        for t in range(1, p + 1):
            assign[pair_index(t - 1, u, n_g)] = t + p * s1
    for s2, u in enumerate(side2):
        block = p * (s2 + r1)
        for t in range(1, p):
            assign[pair_index(t - 1, u, n_g)] = p - t + block
        assign[pair_index(p - 1, u, n_g)] = p + block
    half = g.size * p * (p - 1) // 2
    return _finalize(composite, assign, ctx, half, half)


# ---------------------------------------------------------------------------
# Constructions driven by base labelings
# ---------------------------------------------------------------------------

def construct_join(
    g1: Graph, lab_g1: Labeling, g2: Graph, lab_g2: Labeling, p: int
) -> tuple[Graph, Labeling, PredictedTally]:
    """Join of a labeled graph of order n*p with any labeled graph.

    Keeps g1's labels and shifts g2's by n*p; every cross edge block then
    sweeps a complete residue system. Predicted counts:
    e0 = |eta1| + |eta2| + nm(p-1)/2 + nm,  e1 = |rho1| + |rho2| + nm(p-1)/2.
    """
    ctx = _require_odd_prime(p)
    form = balance_form("join", g1, g2, p)
    _check_base_labeling(lab_g1, g1, "g1")
    _check_base_labeling(lab_g2, g2, "g2")
    re1 = rho_eta(lab_g1, ctx)
    re2 = rho_eta(lab_g2, ctx)
    _check_balance(form, re1.rho_minus_eta, re2.rho_minus_eta)
    n, m = form.params["n"], form.params["m"]
    composite = join_product(g1, g2)
    assign = list(lab_g1.assign) + [x + g1.order for x in lab_g2.assign]
    base = n * m * (p - 1) // 2
    e0 = len(re1.eta) + len(re2.eta) + base + n * m
    e1 = len(re1.rho) + len(re2.rho) + base
    return _finalize(composite, assign, ctx, e0, e1)


def construct_corona(
    g1: Graph, lab_g1: Labeling, g2: Graph, lab_g2: Labeling, p: int
) -> tuple[Graph, Labeling, PredictedTally]:
    """Corona of a labeled connected graph with n copies of a labeled graph of order m*p.

    Copy i reuses g2's labels shifted by m*p*(i-1); hosts take g1's labels
    shifted past every copy. Predicted counts:
    e0 = |eta1| + n|eta2| + nm(p-1)/2 + nm,  e1 = |rho1| + n|rho2| + nm(p-1)/2.
    """
    ctx = _require_odd_prime(p)
    form = balance_form("corona", g1, g2, p)
    _check_base_labeling(lab_g1, g1, "g1")
    _check_base_labeling(lab_g2, g2, "g2")
    re1 = rho_eta(lab_g1, ctx)
    re2 = rho_eta(lab_g2, ctx)
    _check_balance(form, re1.rho_minus_eta, re2.rho_minus_eta)
    n, m = form.params["n"], form.params["m"]
    s = g2.order
    composite = corona_product(g1, g2)
    assign = [0] * composite.order
    for i in range(n):
        for j in range(s):
            assign[corona_copy_index(i, j, s)] = lab_g2.assign[j] + s * i
        assign[corona_host_index(i, n, s)] = lab_g1.assign[i] + n * s
    base = n * m * (p - 1) // 2
    e0 = len(re1.eta) + n * len(re2.eta) + base + n * m
    e1 = len(re1.rho) + n * len(re2.rho) + base
    return _finalize(composite, assign, ctx, e0, e1)


def construct_lexicographic(
    g1: Graph, g2: Graph, lab_g2: Labeling, p: int
) -> tuple[Graph, Labeling, PredictedTally]:
    """Lexicographic product of a unicyclic graph with a labeled graph of order m*p.

    Block i repeats g2's labels shifted by m*p*i. Predicted counts:
    e0 = n|eta2| + n m^2 p (p-1)/2 + n m^2 p,  e1 = n|rho2| + n m^2 p (p-1)/2;
    the hypothesis d2 = m^2 p makes the difference exactly 0.
    """
    ctx = _require_odd_prime(p)
    form = balance_form("lexicographic", g1, g2, p)
    _check_base_labeling(lab_g2, g2, "g2")
    re2 = rho_eta(lab_g2, ctx)
    _check_balance(form, None, re2.rho_minus_eta)
    n, m = form.params["n"], form.params["m"]
    s = g2.order
    composite = lexicographic_product(g1, g2)
    assign = [0] * composite.order
    for i in range(n):
        for j in range(s):
            assign[pair_index(i, j, s)] = lab_g2.assign[j] + s * i
    base = n * m * m * p * (p - 1) // 2
    e0 = n * len(re2.eta) + base + n * m * m * p
    e1 = n * len(re2.rho) + base
    return _finalize(composite, assign, ctx, e0, e1)


def construct_cartesian(
    g1: Graph, lab_g1: Labeling, g2: Graph, p: int
) -> tuple[Graph, Labeling, PredictedTally]:
    """Cartesian product of a labeled graph of order m*p with a graph of size k*order.

    Column j repeats g1's labels shifted by m*p*j; edges inside a column keep
    g1's induced labels while cross edges sum to 2*g1(a) mod p, sweeping a
    complete residue system per block. Predicted counts:
    e0 = n|eta1| + nmk(p-1)/2 + nmk,  e1 = n|rho1| + nmk(p-1)/2.
    """
    ctx = _require_odd_prime(p)
    form = balance_form("cartesian", g1, g2, p)
    _check_base_labeling(lab_g1, g1, "g1")
    re1 = rho_eta(lab_g1, ctx)
    _check_balance(form, re1.rho_minus_eta, None)
    n, m, k = form.params["n"], form.params["m"], form.params["k"]
    composite = cartesian_product(g1, g2)
    assign = [0] * composite.order
    for a in range(g1.order):
        for j in range(n):
            assign[pair_index(a, j, n)] = lab_g1.assign[a] + g1.order * j
    base = n * m * k * (p - 1) // 2
    e0 = n * len(re1.eta) + base + n * m * k
    e1 = n * len(re1.rho) + base
    return _finalize(composite, assign, ctx, e0, e1)


def construct_tensor(
    g1: Graph, lab_g1: Labeling, g2: Graph, p: int
) -> tuple[Graph, Labeling, PredictedTally]:
    """Tensor product of a balanced-labeled graph of order n*p with a connected graph.

    Each copy j repeats g1's labels shifted by n*p*j, so both composite edges
    spawned by a factor-edge pair inherit g1's induced label. Predicted
    counts: e0 = 2|eta1|q and e1 = 2|rho1|q with q the size of g2.
    """
    ctx = _require_odd_prime(p)
    form = balance_form("tensor", g1, g2, p)
    _check_base_labeling(lab_g1, g1, "g1")
    re1 = rho_eta(lab_g1, ctx)
    _check_balance(form, re1.rho_minus_eta, None)
    composite = tensor_product(g1, g2)
    assign = [0] * composite.order
    for a in range(g1.order):
        for j in range(g2.order):
            assign[pair_index(a, j, g2.order)] = lab_g1.assign[a] + g1.order * j
    q = g2.size
    e0 = 2 * len(re1.eta) * q
    e1 = 2 * len(re1.rho) * q
    return _finalize(composite, assign, ctx, e0, e1)


def construct_strong(
    g1: Graph, lab_g1: Labeling, g2: Graph, p: int
) -> tuple[Graph, Labeling, PredictedTally]:
    """Strong product of a labeled graph of order 3p with a tree.

    Combines the cartesian and tensor accountings on the same indexing:
    e0 = n|eta1| + 3(p-1)/2 (n-1) + 3(n-1) + 2|eta1|(n-1),
    e1 = n|rho1| + 3(p-1)/2 (n-1) + 2|rho1|(n-1);
    with d1 = 1 the difference is exactly 1 for every tree order n.
    """
    ctx = _require_odd_prime(p)
    form = balance_form("strong", g1, g2, p)
    _check_base_labeling(lab_g1, g1, "g1")
    re1 = rho_eta(lab_g1, ctx)
    _check_balance(form, re1.rho_minus_eta, None)
    n = form.params["n"]
    composite = strong_product(g1, g2)
    assign = [0] * composite.order
    for a in range(g1.order):
        for j in range(n):
            assign[pair_index(a, j, n)] = lab_g1.assign[a] + 3 * p * j
    rho1, eta1 = len(re1.rho), len(re1.eta)
    cart_base = 3 * (p - 1) // 2 * (n - 1)
    e0 = n * eta1 + cart_base + 3 * (n - 1) + 2 * eta1 * (n - 1)
    e1 = n * rho1 + cart_base + 2 * rho1 * (n - 1)
    return _finalize(composite, assign, ctx, e0, e1)


# ---------------------------------------------------------------------------
# Recipe plumbing
# ---------------------------------------------------------------------------

def run_recipe(recipe: ConstructionRecipe) -> tuple[Graph, Labeling, PredictedTally]:
    """Execute a recipe through the matching constructor."""
    theorem = normalize_theorem(recipe.theorem)
    p = recipe.p

    def lab(g: Graph | None, assign: tuple[int, ...] | None, which: str) -> Labeling:
        if g is None or assign is None:
            raise ValueError(f"recipe for {theorem} needs {which}")
        return Labeling(g, tuple(assign))

    if theorem == "corona-path":
        if recipe.g1 is None:
            raise ValueError("corona-path recipe needs g1")
        return construct_corona_path(recipe.g1, p)
    if theorem == "kp-tensor":
        g = recipe.g2 if recipe.g2 is not None else recipe.g1
        if g is None:
            raise ValueError("kp-tensor recipe needs the bipartite factor")
        return construct_kp_tensor(g, p)
    if recipe.g1 is None or recipe.g2 is None:
        raise ValueError(f"recipe for {theorem} needs both factor graphs")
    if theorem == "join":
        return construct_join(
            recipe.g1,
            lab(recipe.g1, recipe.lab_g1, "lab_g1"),
            recipe.g2,
            lab(recipe.g2, recipe.lab_g2, "lab_g2"),
            p,
        )
    if theorem == "corona":
        return construct_corona(
            recipe.g1,
            lab(recipe.g1, recipe.lab_g1, "lab_g1"),
            recipe.g2,
            lab(recipe.g2, recipe.lab_g2, "lab_g2"),
            p,
        )
    if theorem == "lexicographic":
        return construct_lexicographic(
            recipe.g1, recipe.g2, lab(recipe.g2, recipe.lab_g2, "lab_g2"), p
        )
    if theorem == "cartesian":
        return construct_cartesian(
            recipe.g1, lab(recipe.g1, recipe.lab_g1, "lab_g1"), recipe.g2, p
        )
    if theorem == "tensor":
        return construct_tensor(
            recipe.g1, lab(recipe.g1, recipe.lab_g1, "lab_g1"), recipe.g2, p
        )
    if theorem == "strong":
        return construct_strong(
            recipe.g1, lab(recipe.g1, recipe.lab_g1, "lab_g1"), recipe.g2, p
        )
    raise ValueError(f"unhandled construction {theorem}")
