"""Independent brute-force oracles used to cross-check the package.

Everything here is computed from first principles (squares enumeration,
full permutation scans) without going through the package's table, tally,
or search code, so the two paths can validate each other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations


@lru_cache(maxsize=None)
def brute_residues(p: int) -> frozenset[int]:
    return frozenset((x * x) % p for x in range(1, p))


def brute_symbol(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in brute_residues(p) else -1


def brute_edge_label(total: int, p: int) -> int:
    return 1 if brute_symbol(total, p) == 1 else 0


def brute_tally(edges, assign, p: int) -> tuple[int, int]:
    """(e0, e1) for an assignment indexed by vertex."""
    e1 = sum(brute_edge_label(assign[u] + assign[v], p) for u, v in edges)
    return len(list(edges)) - e1, e1


def all_labelings(n: int):
    """Every bijection vertex -> 1..n, as tuples indexed by vertex."""
    return permutations(range(1, n + 1))


def brute_cordial_count(edges, n: int, p: int) -> int:
    edges = list(edges)
    count = 0
    for assign in all_labelings(n):
        e0, e1 = brute_tally(edges, assign, p)
        if abs(e0 - e1) <= 1:
            count += 1
    return count


def brute_diff_witnesses(edges, n: int, p: int) -> dict[int, list[tuple[int, ...]]]:
    """Map each achievable e1 - e0 to every witness assignment."""
    edges = list(edges)
    out: dict[int, list[tuple[int, ...]]] = {}
    for assign in all_labelings(n):
        e0, e1 = brute_tally(edges, assign, p)
        out.setdefault(e1 - e0, []).append(tuple(assign))
    return out


def brute_has_cordial(edges, n: int, p: int) -> bool:
    edges = list(edges)
    for assign in all_labelings(n):
        e0, e1 = brute_tally(edges, assign, p)
        if abs(e0 - e1) <= 1:
            return True
    return False
