#!/usr/bin/env python3
"""Tour the six binary graph operations and their size formulas, including
the odd-cycle condition that keeps a tensor product connected.

Usage: python demos/products_tour.py
"""

from legcordial import (
    cartesian,
    corona,
    has_odd_cycle,
    is_connected,
    join,
    lexicographic,
    make_complete,
    make_cycle,
    make_path,
    strong,
    tensor,
)


def show(name, g, formula):
    print(f"  {name:<14} order {g.order:3d}  size {g.size:3d}  (formula: {formula})")


def main():
    g1 = make_cycle(3)
    g2 = make_path(4)
    n1, n2, e1, e2 = g1.order, g2.order, g1.size, g2.size
    print(f"factors: C3 (order {n1}, size {e1}) and P4 (order {n2}, size {e2})")
    print("-" * 60)
    show("join", join(g1, g2), e1 + e2 + n1 * n2)
    show("corona", corona(g1, g2), e1 + n1 * e2 + n1 * n2)
    show("lexicographic", lexicographic(g1, g2), e1 * n2 * n2 + n1 * e2)
    show("cartesian", cartesian(g1, g2), n1 * e2 + n2 * e1)
    show("tensor", tensor(g1, g2), 2 * e1 * e2)
    show("strong", strong(g1, g2), n1 * e2 + n2 * e1 + 2 * e1 * e2)

    print()
    print("Tensor connectivity needs an odd cycle in one factor")
    print("-" * 60)
    pairs = [
        ("P2 x P2", make_path(2), make_path(2)),
        ("C4 x P3", make_cycle(4), make_path(3)),
        ("C3 x P2", make_cycle(3), make_path(2)),
        ("C3 x C4", make_cycle(3), make_cycle(4)),
        ("K4 x C6", make_complete(4), make_cycle(6)),
    ]
    for name, a, b in pairs:
        t = tensor(a, b)
        odd = has_odd_cycle(a) or has_odd_cycle(b)
        print(
            f"  {name}: odd cycle in a factor: {str(odd):<5}  "
            f"product connected: {is_connected(t)}"
        )


if __name__ == "__main__":
    main()
