"""Elements of the monoid of co-finite, almost monotone partial bijections of N.

An element is stored as a finite table of exceptional pairs together with an
eventual shift: every ``n >= tail_start`` lies in the domain and maps to
``n + shift``.  The representation is canonical (``tail_start`` is as small as
possible), so structural equality is equality of partial maps.

Composition is left to right: ``x(ab) = (xa)b``, i.e. ``a * b`` applies ``a``
first.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InjectivityViolation, InvalidElement, NonPositiveValue, TailConflict
from .sets import CofiniteSet

Pairs = Mapping[int, int] | Iterable[tuple[int, int]]


@dataclass(frozen=True)
class PartialBijection:
    exceptions: tuple[tuple[int, int], ...]
    tail_start: int
    shift: int
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        table = dict(self.exceptions)
        object.__setattr__(self, "_table", table)
        n, d = self.tail_start, self.shift
        if n < 1 or n + d < 1:
            raise NonPositiveValue(f"tail {n}=>{d:+d} leaves N")
        if len(table) != len(self.exceptions) or list(table) != sorted(table):
            raise InvalidElement("exception keys must be distinct and sorted")
        if len(set(table.values())) != len(table):
            raise InjectivityViolation("repeated exception value")
        for k, v in self.exceptions:
            if not 1 <= k < n or not 1 <= v < n + d:
                raise InvalidElement(f"pair {k}->{v} outside the pre-tail region")
        if table.get(n - 1) == n - 1 + d:
            raise InvalidElement("tail_start is not minimal; use canonicalize()")

    @classmethod
    def _trusted(cls, exceptions: tuple, tail_start: int, shift: int) -> PartialBijection:
        # skips validation; callers guarantee the canonical-form invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "exceptions", exceptions)
        object.__setattr__(obj, "tail_start", tail_start)
        object.__setattr__(obj, "shift", shift)
        object.__setattr__(obj, "_table", dict(exceptions))
        return obj

    # --- evaluation -------------------------------------------------------

    def apply(self, n: int) -> int | None:
        if n >= self.tail_start:
            return n + self.shift
        return self._table.get(n)

    __call__ = apply

    @cached_property
    def dom(self) -> CofiniteSet:
        return CofiniteSet(n for n in range(1, self.tail_start) if n not in self._table)

    @cached_property
    def ran(self) -> CofiniteSet:
        values = set(self._table.values())
        return CofiniteSet(n for n in range(1, self.tail_start + self.shift) if n not in values)

    def items(self, upto: int):
        """Pairs ``(x, (x)self)`` for ``x`` in the domain with ``x < upto``."""
        for x in range(1, upto):
            y = self.apply(x)
            if y is not None:
                yield x, y

    # --- arithmetic -------------------------------------------------------

    def __mul__(self, other: PartialBijection) -> PartialBijection:
        return compose(self, other)

    def inverse(self) -> PartialBijection:
        return invert(self)

    def eventual_shift(self) -> tuple[int, int]:
        return self.tail_start, self.shift

    # --- predicates -------------------------------------------------------

    def is_idempotent(self) -> bool:
        return self.shift == 0 and all(k == v for k, v in self.exceptions)

    def is_monotone(self) -> bool:
        values = [v for _, v in self.exceptions]
        return all(a < b for a, b in zip(values, values[1:]))

    def is_bicyclic(self) -> bool:
        return not self.exceptions

    def is_unit(self) -> bool:
        return not self.dom.holes and not self.ran.holes

    def __str__(self) -> str:
        from .codec import encode

        return encode(self)


def canonicalize(exceptions: Pairs, tail_start: int, shift: int) -> PartialBijection:
    """Build the canonical element from a raw (possibly non-minimal) encoding.

    Pairs whose key lies inside the tail are accepted when they agree with the
    shift and rejected otherwise.  Raises :class:`InjectivityViolation` when two
    points share an image, including collisions with the tail image.
    """
    items = list(exceptions.items() if hasattr(exceptions, "items") else exceptions)
    n, d = tail_start, shift
    if n < 1 or n + d < 1:
        raise NonPositiveValue(f"tail {n}=>{d:+d} leaves N")
    table: dict[int, int] = {}
    for k, v in items:
        if k < 1 or v < 1:
            raise NonPositiveValue(f"pair {k}->{v}")
        if k in table and table[k] != v:
            raise InvalidElement(f"{k} is mapped twice")
        if k >= n:
            if v != k + d:
                raise TailConflict(f"pair {k}->{v} contradicts tail {n}=>{d:+d}")
            continue
        table[k] = v
    seen = set()
    for v in table.values():
        if v in seen:
            raise InjectivityViolation(f"value {v} is hit twice")
        if v >= n + d:
            raise InjectivityViolation(f"value {v} collides with the tail image")
        seen.add(v)
    return _folded(table, n, d)


def _folded(table: dict[int, int], n: int, d: int) -> PartialBijection:
    while table.get(n - 1) == n - 1 + d:
        del table[n - 1]
        n -= 1
    return PartialBijection._trusted(tuple(sorted(table.items())), n, d)


def apply(alpha: PartialBijection, n: int) -> int | None:
    return alpha.apply(n)


def compose(alpha: PartialBijection, beta: PartialBijection) -> PartialBijection:
    """The product ``alpha * beta``: first ``alpha``, then ``beta``."""
    an, ad, at = alpha.tail_start, alpha.shift, alpha._table
    bn, bd, bt = beta.tail_start, beta.shift, beta._table
    start = max(an, bn - ad)
    table = {}
    for x in range(1, start):
        y = x + ad if x >= an else at.get(x)
        if y is not None:
            z = y + bd if y >= bn else bt.get(y)
            if z is not None:
                table[x] = z
    # injective with images below the new tail image by construction
    return _folded(table, start, alpha.shift + beta.shift)


def invert(alpha: PartialBijection) -> PartialBijection:
    pairs = tuple(sorted((v, k) for k, v in alpha.exceptions))
    return PartialBijection._trusted(pairs, alpha.tail_start + alpha.shift, -alpha.shift)


def eventual_shift(alpha: PartialBijection) -> tuple[int, int]:
    return alpha.eventual_shift()


def dom(alpha: PartialBijection) -> CofiniteSet:
    return alpha.dom


def ran(alpha: PartialBijection) -> CofiniteSet:
    return alpha.ran


def equals(alpha: PartialBijection, beta: PartialBijection) -> bool:
    return alpha == beta


def is_idempotent(alpha: PartialBijection) -> bool:
    return alpha.is_idempotent()


def is_monotone_member(alpha: PartialBijection) -> bool:
    """Membership in the submonoid of everywhere monotone elements."""
    return alpha.is_monotone()


def partial_identity(domain: CofiniteSet) -> PartialBijection:
    start = domain.stable_from
    return canonicalize({n: n for n in range(1, start) if n in domain}, start, 0)


def order_match(source: CofiniteSet, target: CofiniteSet) -> PartialBijection:
    """The unique increasing bijection from ``source`` onto ``target``.

    The k-th member of ``source`` goes to the k-th member of ``target``; beyond
    both hole sets this is the shift ``|holes(target)| - |holes(source)|``.
    """
    a, b = len(source.holes), len(target.holes)
    k_tail = max(source.stable_from - a, target.stable_from - b, 1)
    table = {source.kth(k): target.kth(k) for k in range(1, k_tail)}
    return canonicalize(table, k_tail + a, b - a)


IDENTITY = PartialBijection((), 1, 0)
PI = PartialBijection((), 1, 1)
SIGMA = PartialBijection((), 2, -1)


@dataclass(frozen=True)
class Profile:
    """Bounds for :func:`random_element`.

    Every exceptional key and value and every hole of the domain and range lies
    in ``1..bound``; the shift lies in ``min_shift..max_shift``.
    """

    max_exceptions: int = 3
    bound: int = 8
    min_shift: int = -3
    max_shift: int = 3


def random_element(seed: int | random.Random, profile: Profile = Profile()) -> PartialBijection:
    """Sample an element within ``profile``.

    Draws the shift, then the raw tail start, then the number of exceptional
    pairs, then keys (without replacement from the pre-tail prefix) and their
    images (without replacement from the pre-tail part of the range); the
    result is canonicalized.  Deterministic per integer seed.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        d = rng.randint(profile.min_shift, profile.max_shift)
        lo, hi = max(1, 1 - d), min(profile.bound + 1, profile.bound + 1 - d)
        if lo <= hi:
            break
    n = rng.randint(lo, hi)
    k = rng.randint(0, max(0, min(profile.max_exceptions, n - 1, n + d - 1)))
    keys = rng.sample(range(1, n), k)
    values = rng.sample(range(1, n + d), k)
    return canonicalize(zip(keys, values), n, d)
