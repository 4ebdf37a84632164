import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import span_set, vectors
from linrel import subspace as sp
from linrel.classification import enumerate_relations
from linrel.subspace import DimensionError, GuardError


def test_rref_example():
    np.testing.assert_array_equal(sp.rref([[2, 1], [1, 2]], 3), [[1, 2]])


def test_rref_empty_and_zero():
    assert sp.rref(np.zeros((0, 3), dtype=np.int64), 5).shape == (0, 3)
    assert sp.rref([[0, 0, 0]], 5).shape == (0, 3)


@pytest.mark.parametrize("p,n,count", [(3, 2, 6), (2, 4, 67)])
def test_relation_counts(p, n, count):
    # relations on GF(p)^N are subspaces of GF(p)^(2N)
    assert len(list(sp.enumerate_subspaces(p, n))) == count


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_enumeration_matches_gaussian_binomials(p, n):
    if p**n > 2**10:
        pytest.skip("slow")
    subs = list(sp.enumerate_subspaces(p, n))
    assert len(subs) == len(set(subs)) == sp.subspace_count(n, p)
    for k in range(n + 1):
        assert sum(s.dim == k for s in subs) == sp.gaussian_binomial(n, k, p)


def test_enumeration_order_is_stable():
    a = [s.basis.tolist() for s in sp.enumerate_subspaces(3, 2)]
    assert a == [s.basis.tolist() for s in sp.enumerate_subspaces(3, 2)]
    assert [len(x) for x in a] == [0, 1, 1, 1, 1, 2]


def test_canonicity_exhaustive_gf2_cubed():
    # every generating set of a subspace reaches the same RREF
    seen = {}
    vecs = vectors(3, 2)
    for r in range(4):
        for gens in itertools.combinations(vecs, r):
            s = sp.span(list(gens), 3, 2)
            seen.setdefault(span_set(gens, 3, 2), set()).add(s)
    assert len(seen) == sp.subspace_count(3, 2)
    assert all(len(v) == 1 for v in seen.values())


def test_guard():
    with pytest.raises(GuardError):
        list(sp.enumerate_subspaces(2, 21))
    with pytest.raises(GuardError):
        list(enumerate_relations(2, 11))


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        sp.zero(2, 3) + sp.zero(3, 3)
    with pytest.raises(DimensionError):
        sp.zero(2, 3) & sp.zero(2, 5)


def test_elements_and_membership():
    s = sp.span([[1, 1, 0]], 3, 3)
    els = set(s.elements())
    assert els == {(0, 0, 0), (1, 1, 0), (2, 2, 0)}
    assert [2, 2, 0] in s and [1, 0, 0] not in s


def test_project_and_complement():
    s = sp.span([[1, 0, 1], [0, 1, 1]], 3, 2)
    assert sp.project(s, [2]) == sp.full(1, 2)
    comp = sp.complement_basis(s)
    assert len(comp) == 1 and (s + sp.span(comp, 3, 2)) == sp.full(3, 2)


def subspaces(p, n):
    rows = st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), max_size=n + 1)
    return rows.map(lambda r: sp.span(r, n, p))


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([(2, 4), (3, 3), (5, 2)]))
def test_lattice_against_sets(data, pn):
    p, n = pn
    s, t = data.draw(subspaces(p, n)), data.draw(subspaces(p, n))
    ss, ts = set(s.elements()), set(t.elements())
    assert set((s & t).elements()) == ss & ts
    assert set((s + t).elements()) == span_set(list(ss | ts), n, p)
    assert (s <= t) == ss.issubset(ts)
    assert (s + t).dim + (s & t).dim == s.dim + t.dim


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([(2, 4), (3, 3)]))
def test_modular_law(data, pn):
    p, n = pn
    a, b, c = (data.draw(subspaces(p, n)) for _ in range(3))
    if a <= c:
        assert (a + (b & c)) == ((a + b) & c)
