import numpy as np
import pytest

from linrel import relation as rel
from linrel import subspace as sp
from linrel.dynamics import gim, leray, szym_witness_LM, witness_equations
from linrel.spider import (
    MAX_ORBITS, SpiderIndex, build_spider, coset_law_holds, expected_power_kernel,
    verify_appendix,
)
from linrel.subspace import GuardError


@pytest.mark.parametrize("n", range(1, 6))
def test_dimension(n):
    assert build_spider(n).dim == n * (n + 1) + 1


@pytest.mark.parametrize("n", [0, MAX_ORBITS + 1])
def test_guard(n):
    with pytest.raises(GuardError):
        build_spider(n)


def test_bad_index():
    with pytest.raises(ValueError):
        SpiderIndex(2, 3)


def test_arcs_follow_orbits():
    s = build_spider(3)
    a = s.alpha
    assert a.contains(s.unit(2, -2), s.unit(2, -1))
    assert a.contains(s.unit(3, -1), s.hub)
    assert a.contains(s.hub, s.unit(1, 1))
    assert rel.apply(a, s.unit(3, 3)) is None
    assert not a.contains(s.unit(1, 1), s.unit(2, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_kernel_closed_forms(n):
    s = build_spider(n)
    fwd, bwd = sp.zero(s.dim, 2), sp.zero(s.dim, 2)
    inv = ~s.alpha
    for k in range(1, n + 1):
        fwd, bwd = rel.image(s.alpha, fwd), rel.image(inv, bwd)
        assert fwd == expected_power_kernel(s, k)
        assert bwd == expected_power_kernel(s, k, backward=True)


def test_kernel_members_have_even_support():
    # each generator sums an even number of level-i nodes
    s = build_spider(4)
    for v in expected_power_kernel(s, 3).elements():
        assert sum(v) % 2 == 0


@pytest.mark.parametrize("n", [2, 3])
def test_coset_law_everywhere(n):
    s = build_spider(n)
    k0 = sp.zero(s.dim, 2)
    for k in range(1, n + 1):
        k0 = rel.image(s.alpha, k0)
        ak = s.alpha**k
        rs = np.random.default_rng(k)
        for _ in range(20):
            assert coset_law_holds(ak, rs.integers(0, 2, size=s.dim), k0)


@pytest.mark.parametrize("n", range(1, 6))
def test_finite_truncation_is_normal(n):
    s = build_spider(n)
    assert gim(s.obj) == sp.zero(s.dim, 2)
    assert leray(s.obj).dim == 0


def test_lm_witness_on_small_truncation():
    s = build_spider(2)
    w = szym_witness_LM(s.obj)
    assert all(witness_equations(s.obj, w).values())


def test_verify_report():
    report = verify_appendix(4, 3)
    assert report["passed"] and report["dim"] == 21
    names = {c["check"] for c in report["checks"]}
    assert {"forward_kernel_k3", "backward_kernel_k3", "coset_law_k3", "leray_normal"} <= names
    dims = [c["computed_dim"] for c in report["checks"] if c["check"].startswith("forward_kernel")]
    assert dims == [3, 5, 6]


def test_verify_rejects_power_out_of_range():
    with pytest.raises(ValueError):
        verify_appendix(2, 3)


@pytest.mark.parametrize("n,k,dim", [(4, 1, 3), (4, 2, 5), (2, 2, 1)])
def test_kernel_dimensions(n, k, dim):
    assert expected_power_kernel(build_spider(n), k).dim == dim
