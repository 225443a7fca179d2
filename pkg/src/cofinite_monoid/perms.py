"""Finitely supported permutations of N and their parity."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Mapping

from .core import PartialBijection, canonicalize
from .errors import NotAUnit


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __xor__(self, other):
        return Parity(int(self) ^ int(other))

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class FinPermutation:
    moved: tuple[tuple[int, int], ...] = ()
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        table = {k: v for k, v in self.moved if k != v}
        if set(table) != set(table.values()):
            raise ValueError("moved points do not form a bijection of the support")
        if any(k < 1 for k in table):
            raise ValueError("support must lie in N")
        object.__setattr__(self, "moved", tuple(sorted(table.items())))
        object.__setattr__(self, "_table", table)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int] | Iterable[tuple[int, int]]) -> FinPermutation:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(tuple(items))

    @classmethod
    def from_cycles(cls, *cycles: Iterable[int]) -> FinPermutation:
        table = {}
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                table[a] = b
        return cls(tuple(table.items()))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._table)

    def __call__(self, n: int) -> int:
        return self._table.get(n, n)

    def __mul__(self, other: FinPermutation) -> FinPermutation:
        return perm_compose(self, other)

    def inverse(self) -> FinPermutation:
        return FinPermutation(tuple((v, k) for k, v in self.moved))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in sorted(self._table):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            n = self._table[start]
            while n != start:
                cyc.append(n)
                seen.add(n)
                n = self._table[n]
            out.append(tuple(cyc))
        return out


IDENTITY_PERM = FinPermutation()


def perm_compose(p: FinPermutation, q: FinPermutation) -> FinPermutation:
    """Left to right, like the monoid product: ``p`` first, then ``q``."""
    points = p.support | q.support
    return FinPermutation(tuple((n, q(p(n))) for n in points))


def perm_parity(p: FinPermutation) -> Parity:
    # a cycle of length L is a product of L - 1 transpositions
    return Parity(sum(len(c) - 1 for c in p.cycles()) % 2)


def unit_to_perm(alpha: PartialBijection) -> FinPermutation:
    if alpha.shift != 0 or alpha.dom.holes or alpha.ran.holes:
        raise NotAUnit(f"{alpha} is not in the group of units")
    return FinPermutation(alpha.exceptions)


def perm_to_unit(p: FinPermutation) -> PartialBijection:
    start = max(p.support, default=0) + 1
    return canonicalize({n: p(n) for n in range(1, start)}, start, 0)


def random_perm(rng: random.Random, max_point: int = 10, max_moved: int = 6) -> FinPermutation:
    k = rng.randint(0, max_moved)
    points = rng.sample(range(1, max_point + 1), k)
    images = points[:]
    rng.shuffle(images)
    return FinPermutation(tuple(zip(points, images)))
