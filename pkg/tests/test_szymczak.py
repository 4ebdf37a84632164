import numpy as np
import pytest

from linrel import relation as rel
from linrel.canonical import general_linear_group, similar
from linrel.classification import enumerate_relations
from linrel.dynamics import EndoObject, szym_witness_LE, szym_witness_LM
from linrel.subspace import GuardError
from linrel.szymczak import (
    PowerProfile, SzymClassLabel, SzymMorphism, find_szym_isomorphism,
    is_szym_isomorphism, oracle_szym_equiv, power_profile, search_bounds,
    szym_equiv, szym_label,
)


def scaling(lam, p):
    return EndoObject(rel.from_matrix([[lam]], p))


@pytest.mark.parametrize("alpha,expected", [
    (rel.identity(2, 3), PowerProfile(0, 1)),
    (rel.from_matrix([[2]], 3), PowerProfile(0, 2)),
    (rel.top(1, 1, 3), PowerProfile(1, 1)),
    (rel.from_matrix([[0, 1], [0, 0]], 2), PowerProfile(2, 1)),
])
def test_power_profile(alpha, expected):
    prof = power_profile(alpha)
    assert prof == expected
    assert alpha**prof.preperiod == alpha ** (prof.preperiod + prof.period)


@pytest.mark.parametrize("obj,dim,factors", [
    (scaling(2, 3), 1, [[1, 1]]),
    (scaling(1, 3), 1, [[2, 1]]),
    (EndoObject(rel.top(1, 1, 3)), 0, []),
])
def test_label_examples(obj, dim, factors):
    label = szym_label(obj)
    assert label.dim == dim and label.invariant_factors == factors
    assert SzymClassLabel.from_document(label.to_document()) == label


def test_label_document_format():
    assert szym_label(scaling(2, 3)).to_document() == {"p": 3, "dim": 1, "invariant_factors": [[1, 1]]}


def test_equiv_examples():
    assert not szym_equiv(scaling(1, 3), scaling(2, 3))
    assert szym_equiv(EndoObject(rel.top(1, 1, 3)), EndoObject(rel.bottom(1, 1, 3)))
    m = np.array([[1, 1], [0, 1]])
    g = np.array([[0, 1], [1, 1]])
    ginv = np.array([[1, 1], [1, 0]])
    assert szym_equiv(EndoObject.from_matrix(m, 2), EndoObject.from_matrix(g @ m @ ginv % 2, 2))


def test_field_mismatch():
    with pytest.raises(ValueError):
        szym_equiv(scaling(1, 3), scaling(1, 5))


def test_equivalence_laws(objs_gf2_2):
    labels = [szym_label(o) for o in objs_gf2_2]
    rs = np.random.default_rng(1)
    for _ in range(200):
        i, j, k = rs.integers(0, len(labels), size=3)
        a, b, c = objs_gf2_2[i], objs_gf2_2[j], objs_gf2_2[k]
        assert szym_equiv(a, a)
        assert szym_equiv(a, b) == szym_equiv(b, a)
        if szym_equiv(a, b) and szym_equiv(b, c):
            assert szym_equiv(a, c)


def test_oracle_top_vs_identity():
    assert not oracle_szym_equiv(EndoObject(rel.top(1, 1, 2)), EndoObject(rel.identity(1, 2)))


@pytest.mark.parametrize("p", [2, 3])
def test_oracle_agreement_dim_one(p):
    objs = [EndoObject(a) for a in enumerate_relations(p, 1)]
    for a in objs:
        assert oracle_szym_equiv(a, a)
        for b in objs:
            assert oracle_szym_equiv(a, b) == szym_equiv(a, b)


def test_oracle_agreement_sample(objs_gf2_2):
    rs = np.random.default_rng(11)
    for _ in range(30):
        i, j = rs.integers(0, len(objs_gf2_2), size=2)
        a, b = objs_gf2_2[i], objs_gf2_2[j]
        assert oracle_szym_equiv(a, b) == szym_equiv(a, b)


def test_oracle_solution_is_valid():
    a = EndoObject(rel.top(1, 1, 3))
    b = EndoObject.zero(3)
    phi, psi, t, k = find_szym_isomorphism(a, b)
    assert is_szym_isomorphism(a, b, phi, psi, t, k)


def test_oracle_guard():
    big = EndoObject(rel.identity(3, 3))
    with pytest.raises(GuardError):
        oracle_szym_equiv(big, big)


def test_search_bounds_cover_heuristic(objs_gf2_2):
    # T and K never fall below what a common period and preperiod require
    for a in objs_gf2_2[::5]:
        for b in objs_gf2_2[::7]:
            t, k = search_bounds(a.alpha, b.alpha)
            pa, pb = power_profile(a.alpha), power_profile(b.alpha)
            assert t + 1 >= max(pa.period, pb.period)
            assert k >= max(pa.preperiod, pb.preperiod)


@pytest.mark.parametrize("p", [2, 3])
def test_uniqueness_on_bijections(p):
    mats = list(general_linear_group(2, p))
    objs = [EndoObject.from_matrix(m, p) for m in mats]
    labels = [szym_label(o) for o in objs]
    for i, m in enumerate(mats):
        for j, n in enumerate(mats):
            assert (labels[i] == labels[j]) == similar(m, n, p)


def test_szym_morphisms():
    obj = EndoObject(rel.top(1, 1, 3))
    w = szym_witness_LE(obj)
    f = SzymMorphism(w.phi, w.k, obj, w.target)
    g = SzymMorphism(w.psi, w.k, w.target, obj)
    loop = f.then(g)
    ident = SzymMorphism(rel.identity(1, 3), 0, obj, obj)
    assert loop.shift == 2 * w.k
    assert loop.equivalent(ident)


def test_szym_morphism_rejects_non_morphism():
    with pytest.raises(ValueError):
        SzymMorphism(rel.identity(1, 3), 0, scaling(1, 3), scaling(2, 3))
    with pytest.raises(ValueError):
        SzymMorphism(rel.identity(1, 3), -1, scaling(1, 3), scaling(1, 3))


def test_lm_witness_composes_to_identity_class(objs_gf2_2):
    for obj in objs_gf2_2[::4]:
        w = szym_witness_LM(obj)
        f = SzymMorphism(w.phi, w.k, obj, w.target)
        g = SzymMorphism(w.psi, w.k, w.target, obj)
        ident = SzymMorphism(rel.identity(obj.dim, 2), 0, obj, obj)
        assert f.then(g).equivalent(ident)


def heuristic_bounds(a, b):
    pa, pb = power_profile(a), power_profile(b)
    bound = max(pa.preperiod + pa.period, pb.preperiod + pb.period)
    return bound, bound


@pytest.mark.parametrize("p", [2, 3])
def test_heuristic_bound_agrees_with_complete_bound(p, monkeypatch):
    import linrel.szymczak as sz

    objs = [EndoObject(a) for a in enumerate_relations(p, 1)]
    complete = [[oracle_szym_equiv(a, b) for b in objs] for a in objs]
    monkeypatch.setattr(sz, "search_bounds", heuristic_bounds)
    assert [[oracle_szym_equiv(a, b) for b in objs] for a in objs] == complete
