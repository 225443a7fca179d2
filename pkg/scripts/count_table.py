"""Tabulate solution counts of a*x = b for shift pairs a = pi^m, b = pi^n.

The number of solutions is sum_s C(m, s) * P(n, s); the table prints the
closed form next to the size of the enumerated solution set.

    python3 scripts/count_table.py --max 5
"""
import argparse

from cofinite_monoid.core import canonicalize
from cofinite_monoid.solver import count_right, solve_right


def shift(k: int):
    return canonicalize({}, 1, k)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=4, help="largest exponent (enumeration grows fast)")
    args = parser.parse_args()

    header = "m\\n " + " ".join(f"{n:>9}" for n in range(args.max + 1))
    print(header)
    for m in range(args.max + 1):
        cells = []
        for n in range(args.max + 1):
            a, b = shift(m), shift(n)
            formula, found = count_right(a, b), len(solve_right(a, b))
            mark = "" if formula == found else "!"
            cells.append(f"{formula:>8}{mark or ' '}")
        print(f"{m:>3} " + " ".join(cells))
    print("'!' marks a disagreement between the formula and enumeration")


if __name__ == "__main__":
    main()
