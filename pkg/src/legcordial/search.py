"""Exhaustive / backtracking oracle over vertex labelings.

The engine assigns labels in vertex order of decreasing degree (ties broken
by index) and tries candidate labels ascending, so results are deterministic
for a fixed spec. All objectives are integer windows on the rho-minus-eta
statistic d = e1 - e0: cordiality is d in [-1, 1], a target difference is
[d, d], a target window is [d-1, d+1]. A partial assignment is pruned
exactly when even labeling every undecided edge uniformly 0 or uniformly 1
cannot bring d into the window, which keeps pruning sound for counting and
non-existence proofs, not just satisfiability.

Budgets count assignment-tree nodes (each candidate label tried at a vertex)
so runs are reproducible; an optional wall-clock limit is a secondary kill
switch. A budget-exhausted run is a distinct outcome, never conflated with a
completed proof of non-existence.

With jobs > 1 the choices of the first vertex's label are partitioned across
worker processes, each owning a disjoint subspace with an equal share of the
node budget; verdicts are combined in first-label order, which preserves the
sequential engine's determinism (a witness found under a smaller first label
always wins).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .constructors import (
    BALANCE_THEOREMS,
    BalanceForm,
    ConstructionRecipe,
    HypothesisCheck,
    balance_form,
    normalize_theorem,
)
from .graph import Graph
from .labeling import edge_label
from .numtheory import LegendreContext

DEFAULT_ORDER_CEILING = 12
DEFAULT_NODE_BUDGET = 2_000_000

MODES = ("find-first", "count-all", "prove-none")


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_NODE_BUDGET
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("node budget must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class DiffWindow:
    """Objective window on d = |rho| - |eta| = e1 - e0."""

    lo: int
    hi: int

    @staticmethod
    def cordial() -> "DiffWindow":
        return DiffWindow(-1, 1)

    @staticmethod
    def exact(d: int) -> "DiffWindow":
        return DiffWindow(d, d)

    @staticmethod
    def around(d: int) -> "DiffWindow":
        return DiffWindow(d - 1, d + 1)


@dataclass(frozen=True)
class SearchSpec:
    graph: Graph
    p: int
    objective: DiffWindow = field(default_factory=DiffWindow.cordial)
    budget: Budget = field(default_factory=Budget)
    mode: str = "find-first"
    ceiling: int = DEFAULT_ORDER_CEILING
    jobs: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.graph.order > self.ceiling:
            raise ValueError(
                f"graph order {self.graph.order} exceeds the search ceiling {self.ceiling}"
            )
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    outcome: str  # "found" | "none" | "exhausted"
    nodes: int
    labeling: tuple[int, ...] | None = None
    count: int | None = None
    complete: bool = False

    def to_json(self) -> dict:
        obj: dict = {"outcome": self.outcome, "nodes": self.nodes}
        if self.labeling is not None:
            obj["labeling"] = list(self.labeling)
        if self.count is not None:
            obj["count"] = self.count
        return obj


class _OutOfBudget(Exception):
    pass


class _FoundFirst(Exception):
    pass


class _Engine:
    """Shared backtracking core; one instance per (graph, prime)."""

    def __init__(self, graph: Graph, ctx: LegendreContext):
        n = graph.order
        deg = [0] * n
        for u, v in graph.edges:
            deg[u] += 1
            deg[v] += 1
        self.graph = graph
        self.order = sorted(range(n), key=lambda v: (-deg[v], v))
        pos = {v: k for k, v in enumerate(self.order)}
        self.prev: list[list[int]] = [[] for _ in range(n)]
        for u, v in graph.edges:
            ku, kv = pos[u], pos[v]
            self.prev[max(ku, kv)].append(min(ku, kv))
        total = graph.size
        determined = 0
        self.remaining_after = [0] * (n + 1)
        self.remaining_after[0] = total
        for k in range(n):
            determined += len(self.prev[k])
            self.remaining_after[k + 1] = total - determined
        # induced label for every possible endpoint sum 0..2n
        self.sum_label = [edge_label(s, ctx) for s in range(2 * n + 1)]

    def run(
        self,
        lo: int,
        hi: int,
        stop_at_first: bool,
        max_nodes: int,
        deadline: float | None,
        first_label: int | None = None,
        on_complete=None,
    ) -> dict:
        """Explore the subspace; returns nodes used, count, witness, completeness."""
        n = self.graph.order
        labels = [0] * n
        used = [False] * (n + 1)
        state = {"nodes": 0, "count": 0, "witness": None}
        prev = self.prev
        sum_label = self.sum_label
        remaining_after = self.remaining_after

        def place(k: int, diff: int) -> None:
            if k == n:
                if lo <= diff <= hi:
                    state["count"] += 1
                    if state["witness"] is None:
                        state["witness"] = self._assign_by_vertex(labels)
                    if stop_at_first:
                        raise _FoundFirst
                if on_complete is not None:
                    on_complete(diff, self._assign_by_vertex(labels))
                return
            rem = remaining_after[k + 1]
            candidates = (first_label,) if k == 0 and first_label else range(1, n + 1)
            for lab in candidates:
                if used[lab]:
                    continue
                state["nodes"] += 1
                if state["nodes"] > max_nodes:
                    raise _OutOfBudget
                if deadline is not None and state["nodes"] % 4096 == 0:
                    if time.monotonic() > deadline:
                        raise _OutOfBudget
                d = diff
                for j in prev[k]:
                    d += 1 if sum_label[lab + labels[j]] else -1
                if d - rem > hi or d + rem < lo:
                    continue
                used[lab] = True
                labels[k] = lab
                place(k + 1, d)
                used[lab] = False
            return

        complete = True
        try:
            place(0, 0)
        except _FoundFirst:
            complete = False
        except _OutOfBudget:
            return {
                "nodes": state["nodes"],
                "count": state["count"],
                "witness": state["witness"],
                "complete": False,
                "exhausted_budget": True,
            }
        return {
            "nodes": state["nodes"],
            "count": state["count"],
            "witness": state["witness"],
            "complete": complete,
            "exhausted_budget": False,
        }

    def _assign_by_vertex(self, labels_by_pos: list[int]) -> tuple[int, ...]:
        assign = [0] * self.graph.order
        for k, v in enumerate(self.order):
            assign[v] = labels_by_pos[k]
        return tuple(assign)


def _deadline(budget: Budget) -> float | None:
    return None if budget.max_seconds is None else time.monotonic() + budget.max_seconds


def _subspace_task(args) -> tuple[int, dict]:
    graph, p, lo, hi, stop_at_first, first_label, max_nodes, max_seconds = args
    engine = _Engine(graph, LegendreContext(p))
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    out = engine.run(lo, hi, stop_at_first, max_nodes, deadline, first_label=first_label)
    return first_label, out


def _combine_subspaces(results: list[tuple[int, dict]], mode: str, nodes: int) -> SearchResult:
    results.sort(key=lambda pair: pair[0])
    nodes += sum(out["nodes"] for _, out in results)
    witness = None
    for _, out in results:
        if out["witness"] is not None:
            witness = out["witness"]
            break
    all_complete = all(out["complete"] for _, out in results)
    if mode == "count-all":
        if not all_complete:
            return SearchResult("exhausted", nodes)
        total = sum(out["count"] for _, out in results)
        outcome = "found" if total > 0 else "none"
        return SearchResult(outcome, nodes, labeling=witness, count=total, complete=True)
    if witness is not None:
        return SearchResult("found", nodes, labeling=witness)
    if all_complete:
        return SearchResult("none", nodes, complete=True)
    return SearchResult("exhausted", nodes)


def search_labeling(spec: SearchSpec) -> SearchResult:
    """Run the oracle described by ``spec``; see the module docstring for semantics.

    find-first returns the first satisfying labeling in search order, or a
    completed-none certificate, or exhausted. count-all counts every
    satisfying permutation (and reports the first witness). prove-none is
    find-first semantics where a completed "none" is the certificate; a
    witness, if one exists, is reported as "found".
    """
    ctx = LegendreContext(spec.p)
    lo, hi = spec.objective.lo, spec.objective.hi
    stop_at_first = spec.mode in ("find-first", "prove-none")
    n = spec.graph.order

    if spec.jobs > 1 and n > 1:
        import multiprocessing

        per_task = max(spec.budget.max_nodes // n, 1)
        tasks = [
            (spec.graph, spec.p, lo, hi, stop_at_first, lab, per_task, spec.budget.max_seconds)
            for lab in range(1, n + 1)
        ]
        with multiprocessing.get_context("fork").Pool(min(spec.jobs, n)) as pool:
            results = pool.map(_subspace_task, tasks)
        return _combine_subspaces(list(results), spec.mode, nodes=0)

    engine = _Engine(spec.graph, ctx)
    out = engine.run(lo, hi, stop_at_first, spec.budget.max_nodes, _deadline(spec.budget))
    if out["exhausted_budget"]:
        return SearchResult("exhausted", out["nodes"])
    if spec.mode == "count-all":
        outcome = "found" if out["count"] > 0 else "none"
        return SearchResult(
            outcome, out["nodes"], labeling=out["witness"], count=out["count"], complete=True
        )
    if out["witness"] is not None:
        return SearchResult("found", out["nodes"], labeling=out["witness"])
    return SearchResult("none", out["nodes"], complete=True)


def achievable_differences(
    graph: Graph, p: int, budget: Budget | None = None, ceiling: int = DEFAULT_ORDER_CEILING
) -> tuple[dict[int, tuple[int, ...]], bool, int]:
    """Map each achievable d = |rho|-|eta| to its first witness labeling.

    Returns (witnesses, complete, nodes). complete is False when the budget
    ran out, in which case the map may be partial.
    """
    if graph.order > ceiling:
        raise ValueError(
            f"graph order {graph.order} exceeds the search ceiling {ceiling}"
        )
    budget = budget or Budget()
    engine = _Engine(graph, LegendreContext(p))
    witnesses: dict[int, tuple[int, ...]] = {}

    def collect(diff: int, assign: tuple[int, ...]) -> None:
        if diff not in witnesses:
            witnesses[diff] = assign

    q = graph.size
    out = engine.run(
        -q - 1,
        q + 1,
        stop_at_first=False,
        max_nodes=budget.max_nodes,
        deadline=_deadline(budget),
        on_complete=collect,
    )
    return witnesses, not out["exhausted_budget"], out["nodes"]


@dataclass(frozen=True)
class RecipeSearchResult:
    outcome: str  # "found" | "none" | "exhausted"
    recipe: ConstructionRecipe | None
    nodes: int


def _structural_checks(form: BalanceForm) -> list[HypothesisCheck]:
    return [HypothesisCheck("structural preconditions", True, f"params={form.params}")]


def find_base_labelings(
    theorem: str,
    g1: Graph,
    g2: Graph,
    p: int,
    budget: Budget | None = None,
    ceiling: int = DEFAULT_ORDER_CEILING,
) -> RecipeSearchResult:
    """Search for base labelings satisfying a construction's balance hypothesis.

    Structural preconditions (orders, divisibility, connectivity, odd-cycle
    and tree requirements) are enforced before any search begins and raise
    immediately. For single-labeling hypotheses the relevant factor is
    searched for the exact target window. For the join and corona the factor
    with fewer vertices is enumerated completely, and for each difference it
    can achieve the other factor is searched for the complementary window;
    outcome "none" certifies that the full combined space was exhausted.
    """
    theorem = normalize_theorem(theorem)
    if theorem not in BALANCE_THEOREMS:
        raise ValueError(f"{theorem} takes no base labelings")
    form = balance_form(theorem, g1, g2, p)  # raises on structural violations
    budget = budget or Budget()
    nodes_left = budget.max_nodes
    deadline = _deadline(budget)
    total_nodes = 0
    checks = _structural_checks(form)

    def remaining_budget() -> Budget:
        secs = None
        if deadline is not None:
            secs = max(deadline - time.monotonic(), 0.001)
        return Budget(max_nodes=max(nodes_left, 1), max_seconds=secs)

    def windowed(graph: Graph, lo: int, hi: int) -> SearchResult:
        spec = SearchSpec(
            graph,
            p,
            objective=DiffWindow(lo, hi),
            budget=remaining_budget(),
            mode="find-first",
            ceiling=ceiling,
        )
        return search_labeling(spec)

    if form.coef2 == 0:  # hypothesis constrains g1 only
        res = windowed(g1, form.lo, form.hi)
        total_nodes += res.nodes
        if res.outcome == "found":
            checks.append(
                HypothesisCheck("balance hypothesis", True, f"d1 in [{form.lo},{form.hi}]")
            )
            recipe = ConstructionRecipe(
                theorem, p, g1, g2, lab_g1=res.labeling, checks=tuple(checks)
            )
            return RecipeSearchResult("found", recipe, total_nodes)
        return RecipeSearchResult(res.outcome, None, total_nodes)

    if form.coef1 == 0:  # hypothesis constrains g2 only
        res = windowed(g2, form.lo, form.hi)
        total_nodes += res.nodes
        if res.outcome == "found":
            checks.append(
                HypothesisCheck("balance hypothesis", True, f"d2 in [{form.lo},{form.hi}]")
            )
            recipe = ConstructionRecipe(
                theorem, p, g1, g2, lab_g2=res.labeling, checks=tuple(checks)
            )
            return RecipeSearchResult("found", recipe, total_nodes)
        return RecipeSearchResult(res.outcome, None, total_nodes)

    # Two labeled factors: enumerate the smaller one completely.
    scan_is_g1 = g1.order <= g2.order
    scan_graph, other_graph = (g1, g2) if scan_is_g1 else (g2, g1)
    scan_coef, other_coef = (
        (form.coef1, form.coef2) if scan_is_g1 else (form.coef2, form.coef1)
    )
    witnesses, scan_complete, nodes = achievable_differences(
        scan_graph, p, remaining_budget(), ceiling
    )
    total_nodes += nodes
    nodes_left -= nodes
    all_complete = scan_complete
    for d_scan in sorted(witnesses):
        if nodes_left <= 0:
            all_complete = False
            break
        # need other_coef * d_other in [lo - scan_coef*d_scan, hi - scan_coef*d_scan]
        lo_num = form.lo - scan_coef * d_scan
        hi_num = form.hi - scan_coef * d_scan
        d_lo = -(-lo_num // other_coef)  # ceil
        d_hi = hi_num // other_coef  # floor
        if d_lo > d_hi:
            continue
        res = windowed(other_graph, d_lo, d_hi)
        total_nodes += res.nodes
        nodes_left -= res.nodes
        if res.outcome == "found":
            lab1, lab2 = (
                (witnesses[d_scan], res.labeling)
                if scan_is_g1
                else (res.labeling, witnesses[d_scan])
            )
            checks.append(
                HypothesisCheck(
                    "balance hypothesis",
                    True,
                    f"{form.coef1}*d1 + {form.coef2}*d2 in [{form.lo},{form.hi}]",
                )
            )
            recipe = ConstructionRecipe(
                theorem, p, g1, g2, lab_g1=lab1, lab_g2=lab2, checks=tuple(checks)
            )
            return RecipeSearchResult("found", recipe, total_nodes)
        if res.outcome == "exhausted":
            all_complete = False
    outcome = "none" if all_complete else "exhausted"
    return RecipeSearchResult(outcome, None, total_nodes)
