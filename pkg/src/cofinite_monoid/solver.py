"""Solution sets of one-sided equations ``a * x = b`` and ``x * a = b``.

For ``a * x = b`` to be solvable the domain of ``b`` must sit inside the
domain of ``a``.  Any solution then agrees with ``a^-1 * b`` on the image of
dom b, must be undefined on the rest of ran a, and may send an arbitrary
subset of the (finite) complement of ran a injectively into the (finite)
complement of ran b.  That leaves finitely many solutions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, perm

from .codec import encode
from .core import PartialBijection, canonicalize
from .green import simplicity_witness


@dataclass(frozen=True)
class SolutionSet:
    solutions: tuple[PartialBijection, ...]
    free_slots: tuple[int, int]

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __contains__(self, chi: object) -> bool:
        return chi in self.solutions


def _extensions(alpha: PartialBijection, beta: PartialBijection):
    core = alpha.inverse() * beta
    slots = alpha.ran.holes
    targets = beta.ran.holes
    for size in range(min(len(slots), len(targets)) + 1):
        for subset in combinations(slots, size):
            for images in permutations(targets, size):
                yield canonicalize(
                    list(core.exceptions) + list(zip(subset, images)),
                    core.tail_start,
                    core.shift,
                )


def _sorted(solutions) -> tuple[PartialBijection, ...]:
    return tuple(sorted(set(solutions), key=encode))


def solve_right(alpha: PartialBijection, beta: PartialBijection) -> SolutionSet:
    """All ``x`` with ``alpha * x == beta``, sorted by their text encoding."""
    free = (len(alpha.ran.holes), len(beta.ran.holes))
    if not beta.dom <= alpha.dom:
        return SolutionSet((), free)
    found = [chi for chi in _extensions(alpha, beta) if alpha * chi == beta]
    return SolutionSet(_sorted(found), free)


def solve_left(alpha: PartialBijection, beta: PartialBijection) -> SolutionSet:
    """All ``x`` with ``x * alpha == beta`` (inverting turns it into a right equation)."""
    dual = solve_right(alpha.inverse(), beta.inverse())
    found = [chi.inverse() for chi in dual]
    assert all(chi * alpha == beta for chi in found)
    return SolutionSet(_sorted(found), dual.free_slots)


def count_right(alpha: PartialBijection, beta: PartialBijection) -> int:
    if not beta.dom <= alpha.dom:
        return 0
    a, b = len(alpha.ran.holes), len(beta.ran.holes)
    return sum(comb(a, s) * perm(b, s) for s in range(min(a, b) + 1))


def count_left(alpha: PartialBijection, beta: PartialBijection) -> int:
    return count_right(alpha.inverse(), beta.inverse())


@dataclass(frozen=True)
class FReport:
    right: SolutionSet
    left: SolutionSet

    @property
    def cardinalities(self) -> tuple[int, int]:
        return len(self.right), len(self.left)


def check_F_property(alpha: PartialBijection, beta: PartialBijection) -> FReport:
    return FReport(solve_right(alpha, beta), solve_left(alpha, beta))


def check_S_property(
    alpha: PartialBijection, beta: PartialBijection
) -> tuple[PartialBijection, PartialBijection]:
    """Return ``(c, d)`` with ``c * alpha * d == beta``."""
    c, d = simplicity_witness(alpha, beta)
    if c * alpha * d != beta:
        raise AssertionError(f"two-sided witness failed for {alpha}, {beta}")
    return c, d
