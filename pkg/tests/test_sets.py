from hypothesis import given, strategies as st

from cofinite_monoid.sets import CofiniteSet, FiniteSet

holes = st.sets(st.integers(1, 20), max_size=8)


def test_membership_and_kth():
    s = CofiniteSet((2, 3))
    assert 1 in s and 2 not in s and 4 in s
    assert [s.kth(k) for k in range(1, 5)] == [1, 4, 5, 6]
    assert s.index(4) == 2
    assert str(s) == "N\\{2,3}"


@given(holes, st.integers(1, 40))
def test_kth_matches_enumeration(h, k):
    s = CofiniteSet(h)
    members = [n for n in range(1, 80) if n not in h]
    assert s.kth(k) == members[k - 1]
    assert s.index(s.kth(k)) == k


@given(holes, holes)
def test_lattice_operations(h1, h2):
    a, b = CofiniteSet(h1), CofiniteSet(h2)
    assert (a & b).holes == tuple(sorted(h1 | h2))
    assert (a | b).holes == tuple(sorted(h1 & h2))
    assert (a <= b) == (h2 <= h1)
    assert set(a - b) == h2 - h1


def test_finite_set_parse_and_ops():
    f = FiniteSet.parse("3, 1,2")
    assert f.elems == (1, 2, 3)
    assert FiniteSet.parse("") == FiniteSet()
    assert (f | FiniteSet((7,))).elems == (1, 2, 3, 7)
    assert FiniteSet((1,)) <= f
