"""The bicyclic monoid and its copy generated by the up- and down-shift."""
from __future__ import annotations

from dataclasses import dataclass

from .core import PartialBijection, partial_identity
from .sets import CofiniteSet


@dataclass(frozen=True, order=True)
class BicyclicWord:
    """The normal form ``q^a p^b`` with ``p q = 1``."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("exponents must be non-negative")

    def __mul__(self, other: BicyclicWord) -> BicyclicWord:
        return word_mul(self, other)

    def __str__(self) -> str:
        return f"q^{self.a} p^{self.b}"


P = BicyclicWord(0, 1)
Q = BicyclicWord(1, 0)
ONE = BicyclicWord(0, 0)


def word_mul(u: BicyclicWord, v: BicyclicWord) -> BicyclicWord:
    m = min(u.b, v.a)
    return BicyclicWord(u.a + v.a - m, u.b + v.b - m)


def embed(w: BicyclicWord) -> PartialBijection:
    # q -> down-shift, p -> up-shift; q^a p^b is n -> n - a + b on n > a
    return PartialBijection((), w.a + 1, w.b - w.a)


def recognize(alpha: PartialBijection) -> BicyclicWord | None:
    if alpha.exceptions:
        return None
    return BicyclicWord(alpha.tail_start - 1, alpha.tail_start - 1 + alpha.shift)


def projection_idempotent(gamma: PartialBijection) -> PartialBijection:
    """An idempotent ``e`` of the bicyclic copy with ``gamma*e`` and ``e*gamma``
    both bicyclic: the identity on ``{m, m+1, ...}`` for
    ``m = max(tail_start, tail_start + shift)``.

    Relies on the canonical form: exceptional images lie below the tail image.
    """
    m = max(gamma.tail_start, gamma.tail_start + gamma.shift)
    return partial_identity(CofiniteSet(range(1, m)))
