#!/usr/bin/env python3
"""Exercise the exhaustive oracle: find witnesses, count all solutions, prove
non-existence, and hunt base labelings for the hypothesis-driven builders.

Usage: python demos/search_oracle.py
"""

from legcordial import (
    make_complete,
    make_cycle,
    make_path,
    run_recipe,
)
from legcordial.search import (
    SearchSpec,
    achievable_differences,
    find_base_labelings,
    search_labeling,
)


def main():
    print("Find-first: a cordial labeling of C5 mod 5")
    res = search_labeling(SearchSpec(make_cycle(5), 5))
    print(f"  outcome {res.outcome}, labeling {res.labeling}, {res.nodes} nodes\n")

    print("Count-all: every labeling of C3 is cordial mod 3")
    res = search_labeling(SearchSpec(make_cycle(3), 3, mode="count-all"))
    print(f"  {res.count} of 6 permutations qualify\n")

    print("Prove-none: K4 admits no cordial labeling mod 3")
    res = search_labeling(SearchSpec(make_complete(4), 3, mode="prove-none"))
    print(f"  outcome {res.outcome}, complete enumeration: {res.complete}, {res.nodes} nodes\n")

    print("Achievable rho-minus-eta values of P4 mod 3")
    diffs, complete, _ = achievable_differences(make_path(4), 3)
    for d in sorted(diffs):
        print(f"  d = {d:+d}: witness {diffs[d]}")
    print(f"  (complete scan: {complete})\n")

    print("Base-labeling hunt: cartesian product C5 x C4 mod 5")
    out = find_base_labelings("cartesian", make_cycle(5), make_cycle(4), 5)
    print(f"  outcome {out.outcome}, base labeling {out.recipe.lab_g1}")
    graph, lab, pred = run_recipe(out.recipe)
    print(f"  composite order {graph.order}, predicted (e0,e1) = ({pred.e0},{pred.e1})\n")

    print("Base-labeling hunt that must fail: tensor with C3 mod 3")
    out = find_base_labelings("tensor", make_cycle(3), make_cycle(4), 3)
    print(f"  outcome {out.outcome} (exhausted all 6 labelings of C3)")


if __name__ == "__main__":
    main()
