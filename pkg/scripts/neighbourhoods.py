"""Show separating neighbourhoods and product refinements for random elements.

    python3 scripts/neighbourhoods.py --seed 3 --count 5 --kind WF
"""
import argparse
import random

from cofinite_monoid import topology
from cofinite_monoid.core import Profile, random_element
from cofinite_monoid.sets import FiniteSet


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=5)
    parser.add_argument("--kind", choices=["F", "WF"], default="F")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    profile = Profile(max_exceptions=2, bound=5, min_shift=-2, max_shift=2)
    kind = topology.Kind(args.kind)
    for _ in range(args.count):
        a, b = random_element(rng, profile), random_element(rng, profile)
        print(f"a = {a}   b = {b}")
        if a != b:
            fa, fb = topology.separation_witness(a, b, kind)
            print(f"  disjoint: U_a({fa}) and U_b({fb})")
        g = a * b
        fixed = FiniteSet(x for x in range(1, 4) if x in g.dom)
        left, right = topology.product_refinement(a, b, fixed)
        print(f"  U_a({left}) * U_b({right}) lies inside U_ab({fixed}), ab = {g}")
        sample = [topology.random_member(topology.BasicNbhd(kind, a, left), rng) for _ in range(3)]
        print("  members near a: " + ", ".join(map(str, sample)))


if __name__ == "__main__":
    main()
