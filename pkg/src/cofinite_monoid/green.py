"""Green's relations, the semilattice of idempotents and maximal subgroups.

All witnesses are built by order-matching increasing enumerations of
co-finite sets, so they are monotone elements.
"""
from __future__ import annotations

from .core import PartialBijection, canonicalize, order_match, partial_identity
from .errors import NotIdempotent, NotInHClass
from .perms import FinPermutation
from .sets import CofiniteSet, FiniteSet


def is_R(alpha: PartialBijection, beta: PartialBijection) -> bool:
    return alpha.dom == beta.dom


def is_L(alpha: PartialBijection, beta: PartialBijection) -> bool:
    return alpha.ran == beta.ran


def is_H(alpha: PartialBijection, beta: PartialBijection) -> bool:
    return is_R(alpha, beta) and is_L(alpha, beta)


def is_D(alpha: PartialBijection, beta: PartialBijection) -> bool:
    # the monoid is bisimple; d_witness produces the connecting element
    return True


def d_witness(alpha: PartialBijection, beta: PartialBijection) -> PartialBijection:
    """An element R-related to ``alpha`` and L-related to ``beta``."""
    return order_match(alpha.dom, beta.ran)


def _require_idempotent(*elements: PartialBijection) -> None:
    for e in elements:
        if not e.is_idempotent():
            raise NotIdempotent(f"{e} is not idempotent")


def nat_leq(eps: PartialBijection, iota: PartialBijection) -> bool:
    _require_idempotent(eps, iota)
    return eps.dom <= iota.dom


def meet(eps: PartialBijection, iota: PartialBijection) -> PartialBijection:
    _require_idempotent(eps, iota)
    return eps * iota


def to_finset(eps: PartialBijection) -> FiniteSet:
    _require_idempotent(eps)
    return eps.dom.complement()


def from_finset(holes: FiniteSet) -> PartialBijection:
    return partial_identity(CofiniteSet(holes))


def connecting_element(eps: PartialBijection, iota: PartialBijection) -> PartialBijection:
    """An element ``a`` with ``a a^-1 = eps`` and ``a^-1 a = iota``."""
    _require_idempotent(eps, iota)
    return order_match(eps.dom, iota.dom)


def simplicity_witness(
    alpha: PartialBijection, beta: PartialBijection
) -> tuple[PartialBijection, PartialBijection]:
    """Return ``(gamma, delta)`` with ``gamma * alpha * delta == beta``.

    ``gamma`` sends the k-th member of dom beta to the k-th member of dom alpha;
    ``delta`` sends the image under alpha of the k-th member of dom alpha to the
    image under beta of the k-th member of dom beta.
    """
    da, db = alpha.dom, beta.dom
    gamma = order_match(db, da)
    a, b = len(da.holes), len(db.holes)
    k_tail = max(
        da.stable_from - a, alpha.tail_start - a, db.stable_from - b, beta.tail_start - b, 1
    )
    table = {alpha.apply(da.kth(k)): beta.apply(db.kth(k)) for k in range(1, k_tail)}
    delta = canonicalize(
        table, k_tail + a + alpha.shift, (b + beta.shift) - (a + alpha.shift)
    )
    return gamma, delta


def omega_chain(eps: PartialBijection, length: int) -> list[PartialBijection]:
    """A strictly descending chain starting at ``eps``; each step drops the
    least point of the domain."""
    _require_idempotent(eps)
    if length < 1:
        raise ValueError("length must be >= 1")
    chain = [eps]
    while len(chain) < length:
        d = chain[-1].dom
        chain.append(partial_identity(d - FiniteSet((d.least(),))))
    return chain


def _require_h_class(eps: PartialBijection, alpha: PartialBijection) -> None:
    _require_idempotent(eps)
    inv = alpha.inverse()
    if alpha * inv != eps or inv * alpha != eps:
        raise NotInHClass(f"{alpha} is not in the H-class of {eps}")


def h_class_iso(eps: PartialBijection, alpha: PartialBijection) -> FinPermutation:
    """Transport ``alpha`` from the maximal subgroup at ``eps`` to a
    finitary permutation by re-indexing dom eps increasingly."""
    _require_h_class(eps, alpha)
    d = eps.dom
    limit = max(alpha.tail_start, d.stable_from)
    pairs = []
    k = 1
    while (m := d.kth(k)) < limit:
        pairs.append((k, d.index(alpha.apply(m))))
        k += 1
    return FinPermutation(tuple(pairs))


def h_class_element(eps: PartialBijection, perm: FinPermutation) -> PartialBijection:
    """Inverse of :func:`h_class_iso`."""
    _require_idempotent(eps)
    d = eps.dom
    top = max(perm.support, default=0)
    limit = max(d.kth(top) + 1 if top else 1, d.stable_from)
    table = {d.kth(k): d.kth(perm(k)) for k in range(1, top + 1)}
    table.update({n: n for n in range(1, limit) if n in d and n not in table})
    return canonicalize(table, limit, 0)
