"""Binary graph operations: join, corona, and the lexicographic, cartesian,
tensor, and strong products.

Vertex indexing is fixed so that labelings can be assigned positionally:

* four product-set operations -- factor pair (i, j), i from g1 and j from
  g2, maps to composite index i * g2.order + j;
* join -- g1's vertices keep their indices, g2's follow at offset g1.order;
* corona -- copy i of g2 (0-based) occupies the block i * g2.order ..
  (i+1) * g2.order - 1 and the g1.order host vertices come last, so hosts
  end up with the top label block in the corona constructions.

All six operations are pure functions over immutable inputs.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, Edge, has_odd_cycle, is_connected


def pair_index(i: int, j: int, order2: int) -> int:
    """Composite index of factor pair (i, j) when the second factor has order2 vertices."""
    return i * order2 + j


def index_pair(k: int, order2: int) -> tuple[int, int]:
    """Inverse of pair_index."""
    return divmod(k, order2)


def corona_copy_index(host: int, j: int, copy_order: int) -> int:
    """Composite index of vertex j inside the host-th copy of the satellite graph."""
    return host * copy_order + j


def corona_host_index(host: int, n_hosts: int, copy_order: int) -> int:
    """Composite index of the host-th vertex of the base graph."""
    return n_hosts * copy_order + host


def _check_order(n: int) -> int:
    if n > MAX_ORDER:
        raise ValueError(f"composite order {n} exceeds the supported bound {MAX_ORDER}")
    return n


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every cross edge."""
    n1, n2 = g1.order, g2.order
    order = _check_order(n1 + n2)
    edges: list[Edge] = list(g1.edges)
    edges.extend((u + n1, v + n1) for u, v in g2.edges)
    edges.extend((u, v + n1) for u in range(n1) for v in range(n2))
    return Graph(order, edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g1 and g1.order copies of g2; host i adjacent to all of copy i."""
    n, s = g1.order, g2.order
    order = _check_order(n * s + n)
    edges: list[Edge] = []
    for i in range(n):
        base = i * s
        edges.extend((base + u, base + v) for u, v in g2.edges)
        host = corona_host_index(i, n, s)
        edges.extend((host, base + j) for j in range(s))
    edges.extend(
        (corona_host_index(u, n, s), corona_host_index(v, n, s)) for u, v in g1.edges
    )
    return Graph(order, edges)


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    """(v1,u1)(v2,u2) is an edge iff v1v2 in E(g1), or v1 = v2 and u1u2 in E(g2)."""
    n1, n2 = g1.order, g2.order
    order = _check_order(n1 * n2)
    edges: list[Edge] = []
    for i in range(n1):
        edges.extend(
            (pair_index(i, u, n2), pair_index(i, v, n2)) for u, v in g2.edges
        )
    for a, b in g1.edges:
        edges.extend(
            (pair_index(a, u, n2), pair_index(b, v, n2))
            for u in range(n2)
            for v in range(n2)
        )
    return Graph(order, edges)


def cartesian(g1: Graph, g2: Graph) -> Graph:
    """(v1,u1)(v2,u2) is an edge iff one coordinate is fixed and the other moves along a factor edge."""
    n1, n2 = g1.order, g2.order
    order = _check_order(n1 * n2)
    edges: list[Edge] = []
    for i in range(n1):
        edges.extend(
            (pair_index(i, u, n2), pair_index(i, v, n2)) for u, v in g2.edges
        )
    for a, b in g1.edges:
        edges.extend((pair_index(a, j, n2), pair_index(b, j, n2)) for j in range(n2))
    return Graph(order, edges)


def tensor(g1: Graph, g2: Graph) -> Graph:
    """(v1,u1)(v2,u2) is an edge iff both coordinates move along factor edges.

    When both factors are connected with at least one edge each and one of
    them contains an odd cycle, the product is connected; that sufficient
    condition is asserted here as a runtime sanity check. (A one-vertex
    factor yields an edgeless, disconnected product, so it is excluded.)
    """
    n1, n2 = g1.order, g2.order
    order = _check_order(n1 * n2)
    edges: list[Edge] = []
    for a, b in g1.edges:
        for x, y in g2.edges:
            edges.append((pair_index(a, x, n2), pair_index(b, y, n2)))
            edges.append((pair_index(a, y, n2), pair_index(b, x, n2)))
    result = Graph(order, edges)
    if (
        n1 > 1
        and n2 > 1
        and is_connected(g1)
        and is_connected(g2)
        and (has_odd_cycle(g1) or has_odd_cycle(g2))
    ):
        assert is_connected(result), "odd-cycle condition must force a connected tensor product"
    return result


def strong(g1: Graph, g2: Graph) -> Graph:
    """Union of the cartesian and tensor edge sets on the same vertex indexing."""
    cart = cartesian(g1, g2)
    tens = tensor(g1, g2)
    return Graph(cart.order, cart.edges + tens.edges)
