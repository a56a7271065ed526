"""Simple undirected graphs with 0-based vertex indices.

Edges are stored canonically as sorted (min, max) pairs so that two graphs
built from the same edge set compare equal regardless of insertion order.
Standard families (paths, cycles, complete graphs, stars) follow the
1-based naming v1..vn mapped onto indices 0..n-1; vertex labels used by the
labeling machinery are a separate concept and stay 1-based.

Disconnected graphs are representable (they arise as tensor products of
bipartite factors) but the labeling definition only admits connected ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_ORDER = 1_000_000  # total-vertex cap shared by every graph builder

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph: order n, canonical edge tuple, optional names."""

    __slots__ = ("order", "edges", "names")

    def __init__(
        self,
        order: int,
        edges: Iterable[Sequence[int]] = (),
        names: Sequence[str] | None = None,
    ):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {order}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u},{v}) out of range for order {order}")
            canon.add((u, v) if u < v else (v, u))
        self.order = order
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        if names is not None and len(names) != order:
            raise ValueError("names must have one entry per vertex")
        self.names = tuple(names) if names is not None else None

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and other.order == self.order
            and other.edges == self.edges
        )

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def adjacency(g: Graph) -> list[list[int]]:
    """Neighbor lists indexed by vertex, each sorted ascending."""
    adj: list[list[int]] = [[] for _ in range(g.order)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return adj


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def make_path(n: int) -> Graph:
    """Path on n vertices: edges v1v2, v2v3, ..."""
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    """Cycle on n vertices; requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise ValueError(f"complete-graph order must be >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def make_star(n: int) -> Graph:
    """Star of order n: center v1 (index 0) joined to the n-1 leaves."""
    if n < 1:
        raise ValueError(f"star order must be >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """True iff g has exactly one connected component (BFS from vertex 0)."""
    adj = adjacency(g)
    seen = [False] * g.order
    seen[0] = True
    queue = [0]
    while queue:
        nxt: list[int] = []
        for u in queue:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    nxt.append(w)
        queue = nxt
    return all(seen)


@dataclass(frozen=True)
class Bipartition:
    """2-coloring of the vertices; side_of[v] is 1 or 2.

    Every edge joins side 1 to side 2. For order >= 2 both sides are
    non-empty; the one-vertex graph is bipartite only in the degenerate
    sense that it has no edge to violate the coloring.
    """

    side_of: tuple[int, ...]

    def side(self, k: int) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side_of) if s == k)


def _two_color(g: Graph) -> list[int] | None:
    # 0 = uncolored; colors 1/2; works per component.
    adj = adjacency(g)
    color = [0] * g.order
    for start in range(g.order):
        if color[start]:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            nxt: list[int] = []
            for u in queue:
                for w in adj[u]:
                    if color[w] == 0:
                        color[w] = 3 - color[u]
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return None
            queue = nxt
    return color


def bipartition(g: Graph) -> Bipartition | None:
    """A valid 2-coloring of a connected graph, or None iff g has an odd cycle."""
    if not is_connected(g):
        raise ValueError("bipartition is defined for connected graphs")
    color = _two_color(g)
    return None if color is None else Bipartition(tuple(color))


def has_odd_cycle(g: Graph) -> bool:
    """True iff some component of g is not 2-colorable."""
    return _two_color(g) is None


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    obj: dict = {"order": g.order, "edges": [[u, v] for u, v in g.edges]}
    if g.names is not None:
        obj["names"] = list(g.names)
    return obj


def graph_from_json(obj: dict) -> Graph:
    """Read the {"order", "edges", "names"} format; extra keys are ignored."""
    try:
        order = obj["order"]
        edges = obj["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"graph JSON needs 'order' and 'edges': {exc}") from exc
    return Graph(int(order), [(int(u), int(v)) for u, v in edges], obj.get("names"))


def graph_dumps(g: Graph) -> str:
    return json.dumps(graph_to_json(g), indent=2)


def graph_loads(text: str) -> Graph:
    return graph_from_json(json.loads(text))


def graph_to_dot(
    g: Graph,
    vertex_labels: Sequence[int] | None = None,
    edge_labels: dict[Edge, int] | None = None,
) -> str:
    """DOT text for visualization.

    When edge_labels maps canonical edges to 0/1, edges are colored by the
    induced label (1 = royalblue, 0 = crimson) so a verification report can
    be eyeballed.
    """
    lines = ["graph G {"]
    for v in range(g.order):
        name = g.names[v] if g.names is not None else f"v{v + 1}"
        if vertex_labels is not None:
            lines.append(f'  {v} [label="{name}:{vertex_labels[v]}"];')
        else:
            lines.append(f'  {v} [label="{name}"];')
    for u, v in g.edges:
        if edge_labels is not None:
            lab = edge_labels[(u, v)]
            color = "royalblue" if lab == 1 else "crimson"
            lines.append(f'  {u} -- {v} [color={color}, label={lab}];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
