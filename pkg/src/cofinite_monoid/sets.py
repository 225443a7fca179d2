"""Finite and co-finite subsets of the positive integers."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator


def _normalize(values: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(values)))
    if out and out[0] < 1:
        raise ValueError(f"positive integers only, got {out[0]}")
    return out


@dataclass(frozen=True)
class FiniteSet:
    elems: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "elems", _normalize(self.elems))

    @classmethod
    def parse(cls, text: str) -> FiniteSet:
        """Read a comma separated list such as ``"1,2,3"``; empty text is the empty set."""
        parts = [p.strip() for p in text.split(",")]
        return cls(int(p) for p in parts if p)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, n: object) -> bool:
        return n in self.elems

    def __le__(self, other: FiniteSet) -> bool:
        return set(self.elems) <= set(other.elems)

    def __or__(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(self.elems + tuple(other))

    def __and__(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(n for n in self.elems if n in other)

    def __sub__(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(n for n in self.elems if n not in other)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elems)) + "}"


@dataclass(frozen=True)
class CofiniteSet:
    """A subset of N = {1, 2, ...} stored through its finite complement ``holes``."""

    holes: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "holes", _normalize(self.holes))

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and n >= 1 and n not in self.holes

    def kth(self, k: int) -> int:
        """The k-th smallest member, counting from 1."""
        if k < 1:
            raise ValueError("k must be >= 1")
        m = k
        for h in self.holes:
            if h <= m:
                m += 1
            else:
                break
        return m

    def index(self, n: int) -> int:
        """Inverse of :meth:`kth`."""
        if n not in self:
            raise ValueError(f"{n} is not a member")
        return n - bisect_left(self.holes, n)

    def members(self) -> Iterator[int]:
        return (n for n in count(1) if n not in self.holes)

    def least(self) -> int:
        return self.kth(1)

    @property
    def stable_from(self) -> int:
        """Every integer at or beyond this value is a member."""
        return self.holes[-1] + 1 if self.holes else 1

    def complement(self) -> FiniteSet:
        return FiniteSet(self.holes)

    def issubset(self, other: CofiniteSet) -> bool:
        return set(other.holes) <= set(self.holes)

    __le__ = issubset

    def __and__(self, other: CofiniteSet) -> CofiniteSet:
        return CofiniteSet(self.holes + other.holes)

    def __or__(self, other: CofiniteSet) -> CofiniteSet:
        return CofiniteSet(h for h in self.holes if h in other.holes)

    def __sub__(self, other: CofiniteSet | FiniteSet) -> CofiniteSet | FiniteSet:
        if isinstance(other, CofiniteSet):
            return FiniteSet(h for h in other.holes if h in self)
        return CofiniteSet(self.holes + tuple(other))

    def __str__(self) -> str:
        return "N" if not self.holes else "N\\{" + ",".join(map(str, self.holes)) + "}"
