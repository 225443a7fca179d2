import random

import pytest
from hypothesis import given, strategies as st

from cofinite_monoid.core import IDENTITY, PI, SIGMA, canonicalize
from cofinite_monoid.errors import EqualElements, FixedSetOutsideDomain, KindMismatch
from cofinite_monoid.green import is_H
from cofinite_monoid.sets import FiniteSet
from cofinite_monoid.topology import (
    BasicNbhd, Kind, contains, distinct_members, intersect_empty, intersection_witness,
    inversion_image, product_refinement, random_member, separation_witness,
)
from conftest import BETA, EPS12, SIGMA_PI, elements

kinds = st.sampled_from(list(Kind))
SWAP23 = canonicalize({1: 1, 2: 3, 3: 2}, 4, 0)
SWAP12 = canonicalize({1: 2, 2: 1}, 3, 0)


def nbhd(kind, center, *fixed):
    return BasicNbhd(kind, center, FiniteSet(fixed))


@st.composite
def neighbourhoods(draw, kind=None):
    kind = draw(kinds) if kind is None else kind
    a = draw(elements())
    pool = [x for x in range(1, a.tail_start + 4) if x in a.dom]
    fixed = draw(st.lists(st.sampled_from(pool), max_size=3, unique=True))
    return BasicNbhd(kind, a, FiniteSet(fixed))


class TestContains:
    def test_examples(self):
        assert contains(nbhd(Kind.F, IDENTITY, 1), SWAP23)
        assert contains(nbhd(Kind.WF, IDENTITY, 2), SIGMA_PI)
        assert not contains(nbhd(Kind.F, IDENTITY, 2), SIGMA_PI)
        assert not contains(nbhd(Kind.F, IDENTITY, 2), SWAP23)

    def test_fixed_must_be_in_domain(self):
        with pytest.raises(FixedSetOutsideDomain):
            nbhd(Kind.F, SIGMA, 1)

    @given(neighbourhoods())
    def test_base_point(self, U):
        assert contains(U, U.center)

    @given(neighbourhoods(), st.integers(0, 2**32))
    def test_random_members(self, U, seed):
        m = random_member(U, seed)
        assert contains(U, m)
        assert m == random_member(U, seed)
        if U.kind is Kind.F:
            assert is_H(m, U.center)

    @given(neighbourhoods(), st.integers(1, 20), st.integers(0, 2**32))
    def test_monotone_in_fixed_set(self, U, extra, seed):
        # enlarging F shrinks the neighbourhood
        if extra not in U.center.dom:
            return
        smaller = BasicNbhd(U.kind, U.center, U.fixed | FiniteSet((extra,)))
        assert contains(U, random_member(smaller, seed))

    @given(neighbourhoods())
    def test_not_discrete(self, U):
        members = distinct_members(U, 3)
        assert len(set(members)) == 3
        assert all(contains(U, m) for m in members)


class TestProductRefinement:
    def test_examples(self):
        assert product_refinement(PI, SIGMA, FiniteSet((1,))) == (FiniteSet((1,)), FiniteSet((2,)))
        assert product_refinement(IDENTITY, IDENTITY, FiniteSet()) == (FiniteSet(), FiniteSet())
        left, right = product_refinement(EPS12, BETA, FiniteSet((3,)))
        assert left == FiniteSet((3,)) and right == FiniteSet((1, 2, 3))

    def test_outside_domain(self):
        with pytest.raises(FixedSetOutsideDomain):
            product_refinement(IDENTITY, SIGMA, FiniteSet((1,)))

    @pytest.mark.parametrize("kind", list(Kind))
    def test_image_alone_is_not_enough(self, kind):
        # U_I({}) contains a transposition that moves 2 onto the hole of dom(sigma pi)
        U, V = nbhd(kind, IDENTITY), nbhd(kind, SIGMA_PI)
        product = SWAP12 * SIGMA_PI
        assert contains(U, SWAP12) and contains(V, SIGMA_PI)
        assert not contains(nbhd(kind, IDENTITY * SIGMA_PI), product)
        left, right = product_refinement(IDENTITY, SIGMA_PI, FiniteSet())
        assert not contains(nbhd(kind, IDENTITY, *left), SWAP12)

    @given(kinds, elements(), elements(), st.data())
    def test_containment(self, kind, a, b, data):
        g = a * b
        pool = [x for x in range(1, g.tail_start + 3) if x in g.dom]
        fixed = FiniteSet(data.draw(st.lists(st.sampled_from(pool), max_size=3, unique=True)))
        left, right = product_refinement(a, b, fixed)
        U, V, W = BasicNbhd(kind, a, left), BasicNbhd(kind, b, right), BasicNbhd(kind, g, fixed)
        rng = random.Random(data.draw(st.integers(0, 2**32)))
        for _ in range(20):
            assert contains(W, random_member(U, rng) * random_member(V, rng))


class TestInversion:
    def test_examples(self):
        assert inversion_image(nbhd(Kind.F, IDENTITY, 1)) == nbhd(Kind.F, IDENTITY, 1)
        assert inversion_image(nbhd(Kind.F, PI, 1)) == nbhd(Kind.F, SIGMA, 2)
        assert inversion_image(nbhd(Kind.F, EPS12, 3)) == nbhd(Kind.F, EPS12.inverse(), 1)

    def test_weak_kind_rejected(self):
        with pytest.raises(KindMismatch):
            inversion_image(nbhd(Kind.WF, IDENTITY))

    def test_weak_kind_inverse_escapes(self):
        # a member of U_p(F) may send a point to 1, outside ran p; its inverse then has 1 in its domain
        for fixed in [(), (1,), (1, 2, 3)]:
            x = max(fixed, default=0) + 1
            u = canonicalize({n: (1 if n == x else n + 1) for n in range(1, x + 1)}, x + 1, 1)
            assert contains(nbhd(Kind.WF, PI, *fixed), u)
            assert u.inverse().apply(1) == x and 1 not in SIGMA.dom

    @given(neighbourhoods(kind=Kind.F), st.integers(0, 2**32))
    def test_inverse_lands(self, U, seed):
        rng = random.Random(seed)
        V = inversion_image(U)
        for _ in range(10):
            assert contains(V, random_member(U, rng).inverse())


class TestIntersection:
    def test_examples(self):
        assert intersect_empty(nbhd(Kind.WF, IDENTITY, 1), nbhd(Kind.WF, SIGMA_PI, 2))
        U, V = nbhd(Kind.WF, IDENTITY, 2), nbhd(Kind.WF, SIGMA_PI, 3)
        assert intersection_witness(U, V) == SIGMA_PI
        assert intersect_empty(nbhd(Kind.F, PI), nbhd(Kind.F, SIGMA))

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatch):
            intersect_empty(nbhd(Kind.F, PI), nbhd(Kind.WF, PI))

    @given(neighbourhoods(kind=Kind.F), neighbourhoods(kind=Kind.F))
    def test_witness_is_member_F(self, U, V):
        w = intersection_witness(U, V)
        if w is not None:
            assert contains(U, w) and contains(V, w)

    @given(neighbourhoods(kind=Kind.WF), neighbourhoods(kind=Kind.WF))
    def test_witness_is_member_WF(self, U, V):
        w = intersection_witness(U, V)
        if w is not None:
            assert contains(U, w) and contains(V, w)

    @given(kinds, elements(bound=5, max_shift=1), st.integers(0, 2**32))
    def test_same_centre_never_empty(self, kind, a, seed):
        U = nbhd(kind, a)
        m = random_member(U, seed)
        V = BasicNbhd(kind, a, FiniteSet(x for x in range(1, 4) if x in a.dom))
        assert not intersect_empty(U, V) and not intersect_empty(nbhd(kind, m), nbhd(kind, m))


class TestSeparation:
    def test_examples(self):
        assert separation_witness(IDENTITY, SWAP12, Kind.WF) == (FiniteSet((1,)), FiniteSet((1,)))
        assert separation_witness(IDENTITY, SIGMA_PI, Kind.WF) == (FiniteSet((1,)), FiniteSet((2,)))
        assert separation_witness(PI, SIGMA, Kind.F) == (FiniteSet(), FiniteSet())
        assert separation_witness(SIGMA_PI, IDENTITY, Kind.WF) == (FiniteSet((2,)), FiniteSet((1,)))
        # incomparable domains
        a, b = canonicalize({}, 2, 0), canonicalize({1: 1}, 3, 0)
        assert separation_witness(a, b, Kind.WF) == (FiniteSet((2,)), FiniteSet((1,)))

    def test_equal(self):
        with pytest.raises(EqualElements):
            separation_witness(PI, PI, Kind.F)

    @given(kinds, elements(bound=5, max_shift=2), elements(bound=5, max_shift=2), st.integers(0, 2**32))
    def test_disjoint(self, kind, a, b, seed):
        if a == b:
            return
        fa, fb = separation_witness(a, b, kind)
        U, V = BasicNbhd(kind, a, fa), BasicNbhd(kind, b, fb)
        assert intersect_empty(U, V)
        rng = random.Random(seed)
        left = {random_member(U, rng) for _ in range(20)}
        right = {random_member(V, rng) for _ in range(20)}
        assert not left & right
        assert not any(contains(V, x) for x in left)
