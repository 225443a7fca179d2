"""Basic open sets of the two finite-agreement topologies.

``U_a(F)`` is the set of elements that agree with the centre ``a`` on the
finite set ``F``, and additionally

* kind ``F``:  have exactly the domain and range of ``a``;
* kind ``WF``: have domain contained in the domain of ``a``.

Membership and emptiness of intersections reduce to finite checks on hole
sets and on the forced values, so everything here is decidable.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .core import PartialBijection, canonicalize, order_match
from .errors import EqualElements, FixedSetOutsideDomain, KindMismatch
from .sets import FiniteSet


class Kind(str, Enum):
    F = "F"
    WF = "WF"


@dataclass(frozen=True)
class BasicNbhd:
    kind: Kind
    center: PartialBijection
    fixed: FiniteSet = FiniteSet()

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.fixed, FiniteSet):
            object.__setattr__(self, "fixed", FiniteSet(self.fixed))
        outside = [x for x in self.fixed if x not in self.center.dom]
        if outside:
            raise FixedSetOutsideDomain(f"{outside} not in the domain of {self.center}")

    def __contains__(self, beta: PartialBijection) -> bool:
        return contains(self, beta)


def contains(U: BasicNbhd, beta: PartialBijection) -> bool:
    alpha = U.center
    if U.kind is Kind.F:
        if beta.dom != alpha.dom or beta.ran != alpha.ran:
            return False
    elif not beta.dom <= alpha.dom:
        return False
    return all(beta.apply(x) == alpha.apply(x) for x in U.fixed)


def _image(alpha: PartialBijection, points) -> FiniteSet:
    return FiniteSet(alpha.apply(x) for x in points)


def product_refinement(
    alpha: PartialBijection, beta: PartialBijection, fixed: FiniteSet
) -> tuple[FiniteSet, FiniteSet]:
    """Fixed sets ``(F1, F2)`` with ``U_alpha(F1) * U_beta(F2) ⊆ U_{alpha beta}(fixed)``.

    Works for both kinds.  Besides ``fixed`` and its image, the left set pins
    the points that alpha sends outside dom beta and the right set pins
    dom beta minus ran alpha; without these a perturbed factor can move a point
    into, or out of, the domain of the product.
    """
    fixed = FiniteSet(fixed)
    gamma = alpha * beta
    outside = [x for x in fixed if x not in gamma.dom]
    if outside:
        raise FixedSetOutsideDomain(f"{outside} not in the domain of the product")
    db = beta.dom
    upto = max(alpha.tail_start, beta.tail_start - alpha.shift)
    dropped = (x for x, y in alpha.items(upto) if y not in db)
    left = fixed | FiniteSet(dropped)
    right = _image(alpha, fixed) | (db - alpha.ran)
    return left, right


def inversion_image(U: BasicNbhd) -> BasicNbhd:
    """``U_{a^-1}((F)a)``; contains the inverse of every member of ``U``.

    Only defined for kind F: in kind WF a member may send a point outside
    ran a, and then its inverse escapes every basic set around ``a^-1``.
    """
    if U.kind is not Kind.F:
        raise KindMismatch("inversion image is only available for kind F")
    return BasicNbhd(Kind.F, U.center.inverse(), _image(U.center, U.fixed))


def intersection_witness(U: BasicNbhd, V: BasicNbhd) -> PartialBijection | None:
    """A member of ``U ∩ V``, or ``None`` when the intersection is empty."""
    if U.kind is not V.kind:
        raise KindMismatch(f"{U.kind.value} vs {V.kind.value}")
    a, b = U.center, V.center
    if U.kind is Kind.F and (a.dom != b.dom or a.ran != b.ran):
        return None
    forced: dict[int, int] = {}
    for centre, fixed, other in ((a, U.fixed, b), (b, V.fixed, a)):
        for x in fixed:
            if x not in other.dom:
                return None
            y = centre.apply(x)
            if forced.setdefault(x, y) != y:
                return None
    if len(set(forced.values())) != len(forced):
        return None
    if U.kind is Kind.F:
        rest = order_match(a.dom - FiniteSet(forced), a.ran - FiniteSet(forced.values()))
        pairs = list(rest.items(rest.tail_start)) + list(forced.items())
        return canonicalize(pairs, rest.tail_start, rest.shift)
    common = a.dom & b.dom
    start = max([common.stable_from, *(k + 1 for k in forced), *(v + 1 for v in forced.values())])
    return canonicalize(forced, start, 0)


def intersect_empty(U: BasicNbhd, V: BasicNbhd) -> bool:
    return intersection_witness(U, V) is None


def _first_disagreement(alpha: PartialBijection, beta: PartialBijection) -> int:
    # distinct elements with one domain differ below both tails or everywhere on them
    return next(x for x in alpha.dom.members() if alpha.apply(x) != beta.apply(x))


def separation_witness(
    alpha: PartialBijection, beta: PartialBijection, kind: Kind | str
) -> tuple[FiniteSet, FiniteSet]:
    """Fixed sets whose basic neighbourhoods of ``alpha`` and ``beta`` are disjoint."""
    kind = Kind(kind)
    if alpha == beta:
        raise EqualElements(str(alpha))
    da, db = alpha.dom, beta.dom
    if kind is Kind.F and (da != db or alpha.ran != beta.ran):
        result = FiniteSet(), FiniteSet()
    elif da == db:
        x = _first_disagreement(alpha, beta)
        result = FiniteSet((x,)), FiniteSet((x,))
    elif da <= db:
        result = FiniteSet((da.least(),)), FiniteSet((min(db - da),))
    elif db <= da:
        result = FiniteSet((min(da - db),)), FiniteSet((db.least(),))
    else:
        result = FiniteSet((min(da - db),)), FiniteSet((min(db - da),))
    assert intersect_empty(BasicNbhd(kind, alpha, result[0]), BasicNbhd(kind, beta, result[1]))
    return result


def _window(U: BasicNbhd) -> int:
    a = U.center
    return max(a.tail_start, a.tail_start + a.shift, max(U.fixed, default=0) + 1)


def random_member(U: BasicNbhd, seed: int | random.Random, spread: int = 4) -> PartialBijection:
    """A member of ``U`` obtained by a finite perturbation of the centre.

    Kind F shuffles the images of a few free points.  Kind WF may also
    redirect free points to unused values and delete free points.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    a = U.center
    limit = _window(U) + spread
    table = dict(a.items(limit))
    free = [x for x in table if x not in U.fixed]
    chosen = rng.sample(free, rng.randint(0, min(spread, len(free))))
    images = [table[x] for x in chosen]
    rng.shuffle(images)
    table.update(zip(chosen, images))
    if U.kind is Kind.WF:
        unused = [v for v in range(1, limit + a.shift) if v not in set(table.values())]
        for x in chosen:
            roll = rng.random()
            if roll < 0.25:
                del table[x]
            elif roll < 0.5 and unused:
                old = table[x]
                table[x] = unused.pop(rng.randrange(len(unused)))
                unused.append(old)
    return canonicalize(table, limit, a.shift)


def distinct_members(U: BasicNbhd, count: int) -> list[PartialBijection]:
    """``count`` pairwise distinct members of ``U``, the centre first."""
    a = U.center
    base = _window(U) + 1
    out = [a]
    for j in range(count - 1):
        s, t = base + 2 * j, base + 2 * j + 1
        table = dict(a.items(t + 1))
        if U.kind is Kind.F:
            table[s], table[t] = table[t], table[s]
        else:
            del table[s]
        out.append(canonicalize(table, t + 1, a.shift))
    return out
