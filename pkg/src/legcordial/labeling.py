"""Vertex labelings and the induced 0/1 edge function.

A labeling of a graph of order n assigns the labels 1..n bijectively to its
vertices. For an odd prime p, the induced label of an edge uv is

    1  when f(u) + f(v) is a quadratic residue mod p,
    0  when the sum is a nonresidue or divisible by p.

The divisible-by-p branch never consults the Legendre symbol: the symbol
would be 0, which the {0, 1} codomain cannot express. A labeling is cordial
mod p when the two induced counts differ by at most 1; the definition only
admits connected graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph, is_connected
from .numtheory import LegendreContext


class AdmissionError(ValueError):
    """The graph falls outside the labeling definition (it is disconnected)."""


@dataclass(frozen=True)
class Labeling:
    """Bijection vertex -> {1, ..., n}, stored densely by vertex index."""

    graph: Graph
    assign: tuple[int, ...]

    def __post_init__(self):
        n = self.graph.order
        if len(self.assign) != n or sorted(self.assign) != list(range(1, n + 1)):
            raise ValueError(f"assign must be a permutation of 1..{n}")

    def label(self, v: int) -> int:
        return self.assign[v]


@dataclass(frozen=True)
class EdgeTally:
    """Counts of induced edge labels; difference e0 - e1 drives search pruning."""

    e0: int
    e1: int

    @property
    def difference(self) -> int:
        return self.e0 - self.e1

    @property
    def is_cordial(self) -> bool:
        return abs(self.e0 - self.e1) <= 1


@dataclass(frozen=True)
class RhoEta:
    """Edge partition by induced label: rho holds the 1-edges, eta the 0-edges."""

    rho: frozenset[Edge]
    eta: frozenset[Edge]

    @property
    def rho_minus_eta(self) -> int:
        return len(self.rho) - len(self.eta)


def edge_label(total: int, ctx: LegendreContext) -> int:
    """Induced label of an edge whose endpoint labels sum to total."""
    r = total % ctx.p
    if r == 0:
        return 0
    return 1 if ctx.symbols[r] == 1 else 0


def induced_tally(lab: Labeling, ctx: LegendreContext) -> EdgeTally:
    """Tally edge_label(f(u) + f(v)) over every edge of the labeled graph."""
    assign = lab.assign
    e1 = sum(edge_label(assign[u] + assign[v], ctx) for u, v in lab.graph.edges)
    return EdgeTally(e0=lab.graph.size - e1, e1=e1)


def is_cordial(lab: Labeling, ctx: LegendreContext) -> bool:
    """True iff |e0 - e1| <= 1; only connected graphs are admitted."""
    if not is_connected(lab.graph):
        raise AdmissionError("cordiality is defined for connected graphs only")
    return induced_tally(lab, ctx).is_cordial


def rho_eta(lab: Labeling, ctx: LegendreContext) -> RhoEta:
    """Partition the edge set by induced label."""
    assign = lab.assign
    rho, eta = [], []
    for u, v in lab.graph.edges:
        (rho if edge_label(assign[u] + assign[v], ctx) else eta).append((u, v))
    return RhoEta(rho=frozenset(rho), eta=frozenset(eta))


def identity_labeling(g: Graph) -> Labeling:
    """Vertex i gets label i + 1."""
    return Labeling(g, tuple(range(1, g.order + 1)))


def labeling_to_json(lab: Labeling, p: int) -> dict:
    return {"p": p, "assign": list(lab.assign)}


def labeling_from_json(obj: dict, graph: Graph) -> tuple[Labeling, int | None]:
    """Read the {"p", "assign"} format against a known graph."""
    try:
        assign = obj["assign"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"labeling JSON needs 'assign': {exc}") from exc
    p = obj.get("p")
    return Labeling(graph, tuple(int(x) for x in assign)), (int(p) if p is not None else None)


def tally_report(tally: EdgeTally) -> dict:
    """Verification report payload: {"e0", "e1", "cordial"}."""
    return {"e0": tally.e0, "e1": tally.e1, "cordial": tally.is_cordial}
