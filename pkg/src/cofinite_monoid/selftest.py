"""Seeded property suites behind ``cofinite-monoid selftest``.

Each suite is a single randomized trial returning ``None`` on success or a
short description of the counterexample.  A suite draws from its own
generator, seeded by ``"<seed>:<suite name>"``, so reports are reproducible
and independent of suite order.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import bicyclic, green, solver, topology
from .codec import decode, encode
from .core import PartialBijection, Profile, random_element
from .expr import eval_expr
from .perms import perm_compose, perm_parity, perm_to_unit, random_perm, unit_to_perm
from .sets import FiniteSet

Trial = Callable[[random.Random], "str | None"]

SMALL = Profile(max_exceptions=3, bound=6, min_shift=-2, max_shift=2)


def _el(rng: random.Random, profile: Profile = Profile()) -> PartialBijection:
    return random_element(rng, profile)


def _idem(rng: random.Random) -> PartialBijection:
    a = _el(rng)
    return a * a.inverse()


def _laws(rng):
    a, b, c = _el(rng), _el(rng), _el(rng)
    if (a * b) * c != a * (b * c):
        return f"associativity fails for {a}, {b}, {c}"
    if a * a.inverse() * a != a or a.inverse() * a * a.inverse() != a.inverse():
        return f"inverse axioms fail for {a}"
    if (a * b).inverse() != b.inverse() * a.inverse():
        return f"inverse of a product fails for {a}, {b}"
    e, f = _idem(rng), _idem(rng)
    if e * f != f * e:
        return f"idempotents {e}, {f} do not commute"


def _idempotents(rng):
    a = _el(rng) if rng.random() < 0.5 else _idem(rng)
    if a.is_idempotent() != (a * a == a):
        return f"idempotent predicate wrong on {a}"


def _natural_order(rng):
    e, f = _idem(rng), _idem(rng)
    if green.nat_leq(e, f) != (e * f == e):
        return f"natural order wrong on {e}, {f}"


def _semilattice(rng):
    e, f = _idem(rng), _idem(rng)
    if green.from_finset(green.to_finset(e)) != e:
        return f"finite-set round trip fails on {e}"
    if green.to_finset(green.meet(e, f)) != green.to_finset(e) | green.to_finset(f):
        return f"meet does not go to union on {e}, {f}"


def _chain(rng):
    e = _idem(rng)
    chain = green.omega_chain(e, rng.randint(1, 12))
    sizes = [len(green.to_finset(x)) for x in chain]
    if sizes != list(range(sizes[0], sizes[0] + len(chain))):
        return f"co-rank does not grow by one along the chain from {e}"
    if any(not green.nat_leq(y, x) or x == y for x, y in zip(chain, chain[1:])):
        return f"chain from {e} is not strictly descending"


def _connecting(rng):
    e, f = _idem(rng), _idem(rng)
    a = green.connecting_element(e, f)
    if a * a.inverse() != e or a.inverse() * a != f or not a.is_monotone():
        return f"connecting element wrong for {e}, {f}"


def _simple(rng):
    a, b = _el(rng), _el(rng)
    g, d = green.simplicity_witness(a, b)
    if g * a * d != b:
        return f"two-sided witness wrong for {a}, {b}"


def _relations(rng):
    a, b = _el(rng, SMALL), _el(rng, SMALL)
    if green.is_R(a, b) != (a * a.inverse() == b * b.inverse()):
        return f"R wrong on {a}, {b}"
    if green.is_L(a, b) != (a.inverse() * a == b.inverse() * b):
        return f"L wrong on {a}, {b}"
    if green.is_H(a, b) != (green.is_R(a, b) and green.is_L(a, b)):
        return f"H wrong on {a}, {b}"


def _bisimple(rng):
    a, b = _el(rng), _el(rng)
    m = green.d_witness(a, b)
    if not (green.is_R(a, m) and green.is_L(m, b)):
        return f"D witness wrong for {a}, {b}"


def _finite_solutions(rng):
    a, b = _el(rng, SMALL), _el(rng, SMALL)
    if rng.random() < 0.5:
        b = a * b
    right = solver.solve_right(a, b)
    if len(right) != solver.count_right(a, b):
        return f"solution count disagrees with enumeration for {a}, {b}"
    if any(a * x != b for x in right) or any(x * a != b for x in solver.solve_left(a, b)):
        return f"unsound solution for {a}, {b}"


def _units(rng):
    p, q = random_perm(rng), random_perm(rng)
    if unit_to_perm(perm_to_unit(p)) != p:
        return f"unit round trip fails for {p.cycles()}"
    if perm_parity(perm_compose(p, q)) != perm_parity(p) ^ perm_parity(q):
        return f"parity not multiplicative on {p.cycles()}, {q.cycles()}"
    if perm_to_unit(p) * perm_to_unit(q) != perm_to_unit(perm_compose(p, q)):
        return f"unit embedding not multiplicative on {p.cycles()}, {q.cycles()}"


def _eventual_shift(rng):
    a = _el(rng)
    n, d = a.eventual_shift()
    if any(a.apply(i) != i + d for i in range(n, n + 51)):
        return f"tail of {a} is not a shift"
    if n > 1 and a.apply(n - 1) == n - 1 + d:
        return f"threshold of {a} is not minimal"


def _projection(rng):
    g = _el(rng)
    e = bicyclic.projection_idempotent(g)
    if not e.is_idempotent() or bicyclic.recognize(e) is None:
        return f"projection of {g} is not a bicyclic idempotent"
    if bicyclic.recognize(g * e) is None or bicyclic.recognize(e * g) is None:
        return f"products with the projection of {g} leave the bicyclic copy"
    i = _idem(rng)
    e0 = i * bicyclic.projection_idempotent(i)
    if not (i * e0 == e0 * i == e0) or bicyclic.recognize(e0) is None:
        return f"absorbing idempotent wrong for {i}"


def _embedding(rng):
    u = bicyclic.BicyclicWord(rng.randint(0, 10), rng.randint(0, 10))
    v = bicyclic.BicyclicWord(rng.randint(0, 10), rng.randint(0, 10))
    if bicyclic.embed(u * v) != bicyclic.embed(u) * bicyclic.embed(v):
        return f"embedding not multiplicative on {u}, {v}"
    if bicyclic.recognize(bicyclic.embed(u)) != u:
        return f"recognize does not invert embed on {u}"


def _fixed_subset(rng, a: PartialBijection) -> FiniteSet:
    pool = [x for x in range(1, a.tail_start + 4) if x in a.dom]
    return FiniteSet(rng.sample(pool, rng.randint(0, min(3, len(pool)))))


def _continuity(rng):
    kind = rng.choice(list(topology.Kind))
    a, b = _el(rng), _el(rng)
    g = a * b
    fixed = _fixed_subset(rng, g)
    left, right = topology.product_refinement(a, b, fixed)
    U, V = topology.BasicNbhd(kind, a, left), topology.BasicNbhd(kind, b, right)
    W = topology.BasicNbhd(kind, g, fixed)
    for _ in range(10):
        u, v = topology.random_member(U, rng), topology.random_member(V, rng)
        if not topology.contains(W, u * v):
            return f"{kind.value}: product {u} * {v} escapes the neighbourhood of {g}"
    if kind is topology.Kind.F:
        inv = topology.inversion_image(W)
        for _ in range(10):
            w = topology.random_member(W, rng)
            if not topology.contains(inv, w.inverse()) or not green.is_H(w, g):
                return f"F: inverse of {w} escapes, or member not H-related to {g}"


def _hausdorff(rng):
    kind = rng.choice(list(topology.Kind))
    a, b = _el(rng, SMALL), _el(rng, SMALL)
    if a == b:
        return None
    fa, fb = topology.separation_witness(a, b, kind)
    U, V = topology.BasicNbhd(kind, a, fa), topology.BasicNbhd(kind, b, fb)
    if not topology.intersect_empty(U, V):
        return f"{kind.value}: neighbourhoods of {a}, {b} meet"
    left = {topology.random_member(U, rng) for _ in range(10)}
    if any(topology.contains(V, x) for x in left):
        return f"{kind.value}: a member near {a} lies near {b}"


def _codec(rng):
    a = _el(rng)
    if decode(encode(a)) != a or eval_expr(encode(a)) != a:
        return f"text round trip fails for {a}"


SUITES: dict[str, Trial] = {
    "inverse-semigroup-laws": _laws,
    "idempotents-are-identities": _idempotents,
    "natural-order-is-inclusion": _natural_order,
    "semilattice-of-finite-sets": _semilattice,
    "omega-chains": _chain,
    "connecting-elements": _connecting,
    "simplicity": _simple,
    "green-relations": _relations,
    "bisimplicity": _bisimple,
    "finite-solution-sets": _finite_solutions,
    "units-and-parity": _units,
    "eventual-shift": _eventual_shift,
    "bicyclic-projection": _projection,
    "bicyclic-embedding": _embedding,
    "continuity": _continuity,
    "hausdorff": _hausdorff,
    "text-round-trip": _codec,
}


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class Report:
    seed: int
    iterations: int
    results: list[SuiteResult]
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def format(self) -> str:
        lines = [f"selftest seed={self.seed} iterations={self.iterations}"]
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            lines.append(f"{status} {r.name:<28} {r.checked} checked, {len(r.failures)} failed")
            lines.extend(f"    {msg}" for msg in r.failures[:3])
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "iterations": self.iterations,
            "ok": self.ok,
            "suites": [
                {"name": r.name, "checked": r.checked, "failed": len(r.failures), "examples": r.failures[:3]}
                for r in self.results
            ],
        }


def run_selftest(seed: int, iterations: int, suites: dict[str, Trial] = SUITES) -> Report:
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    start = time.perf_counter()
    results = []
    for name, trial in suites.items():
        rng = random.Random(f"{seed}:{name}")
        result = SuiteResult(name, iterations)
        for _ in range(iterations):
            msg = trial(rng)
            if msg is not None:
                result.failures.append(msg)
        results.append(result)
    return Report(seed, iterations, results, time.perf_counter() - start)
