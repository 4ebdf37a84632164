"""Deciding Szymczak (shift) equivalence of endorelations.

Two objects are equivalent exactly when their Leray forms are similar, so the
decider compares :class:`SzymClassLabel` values.  :func:`oracle_szym_equiv`
decides the same question from the definition, by exhaustive search for
intertwining relations, and exists to cross-check the decider.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import relation as rel
from .canonical import InvariantFactors, invariant_factors
from .dynamics import EndoObject, is_endo_morphism, leray
from .relation import LinearRelation, compose
from .subspace import GuardError, enumerate_subspaces

ORACLE_LIMIT = 2**24


@dataclass(frozen=True, order=True)
class SzymClassLabel:
    """Dimension of the Leray image plus invariant factors of its matrix."""

    p: int
    dim: int
    factors: tuple[tuple[int, ...], ...]

    @property
    def invariant_factors(self) -> list[list[int]]:
        return [list(f) for f in self.factors]

    def to_document(self) -> dict:
        return {"p": self.p, "dim": self.dim, "invariant_factors": self.invariant_factors}

    @classmethod
    def from_document(cls, doc: dict) -> "SzymClassLabel":
        return cls(doc["p"], doc["dim"], tuple(tuple(f) for f in doc["invariant_factors"]))

    def __str__(self) -> str:
        return f"d={self.dim} {self.invariant_factors}"


def szym_label(obj: EndoObject) -> SzymClassLabel:
    form = leray(obj)
    inv: InvariantFactors = invariant_factors(form.matrix, form.p)
    return SzymClassLabel(int(form.p), form.dim, inv.key())


def szym_equiv(a: EndoObject, b: EndoObject) -> bool:
    if a.p != b.p:
        raise ValueError(f"objects over GF({int(a.p)}) and GF({int(b.p)})")
    return szym_label(a) == szym_label(b)


@dataclass(frozen=True)
class SzymMorphism:
    """A Szymczak morphism representative ``[phi, n]``."""

    phi: LinearRelation
    shift: int
    src: EndoObject
    dst: EndoObject

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")
        if not is_endo_morphism(self.phi, self.src, self.dst):
            raise rel.RelationError("phi does not intertwine the endorelations")

    def then(self, other: "SzymMorphism") -> "SzymMorphism":
        """``[psi, m] o [phi, n] = [psi o phi, m + n]`` where ``other`` is ``[psi, m]``."""
        return SzymMorphism(compose(other.phi, self.phi), self.shift + other.shift, self.src, other.dst)

    def equivalent(self, other: "SzymMorphism", max_k: int | None = None) -> bool:
        """``(phi, n) == (psi, m)`` iff ``phi o alpha^(m+k) == psi o alpha^(n+k)`` for some ``k``."""
        alpha = self.src.alpha
        if max_k is None:
            prof = power_profile(alpha)
            max_k = prof.preperiod + prof.period
        for k in range(max_k + 1):
            if compose(self.phi, rel.power(alpha, other.shift + k)) == compose(
                other.phi, rel.power(alpha, self.shift + k)
            ):
                return True
        return False


@dataclass(frozen=True)
class PowerProfile:
    """Minimal ``(preperiod, period)`` with ``alpha^preperiod == alpha^(preperiod + period)``."""

    preperiod: int
    period: int


def power_profile(alpha: LinearRelation) -> PowerProfile:
    seen: dict[LinearRelation, int] = {}
    current = rel.identity(alpha.dim_dom, alpha.p)
    j = 0
    while current not in seen:
        seen[current] = j
        current = compose(alpha, current)
        j += 1
    i = seen[current]
    return PowerProfile(i, j - i)


def powers(alpha: LinearRelation, count: int) -> list[LinearRelation]:
    """``[alpha^0, ..., alpha^(count - 1)]``."""
    out = [rel.identity(alpha.dim_dom, alpha.p)]
    while len(out) < count:
        out.append(compose(alpha, out[-1]))
    return out


def search_bounds(a: LinearRelation, b: LinearRelation) -> tuple[int, int]:
    """Bounds ``(T, K)`` on the total shift and on ``k`` for the oracle search.

    Any solution can be moved to ``k >= P`` by composing with more powers,
    then ``t`` reduced modulo ``L`` and ``k`` into ``[P, P + L)``, where
    ``P`` is the larger preperiod and ``L`` the lcm of the periods.
    """
    pa, pb = power_profile(a), power_profile(b)
    pre = max(pa.preperiod, pb.preperiod)
    lcm = math.lcm(pa.period, pb.period)
    return lcm - 1, pre + lcm - 1


def is_szym_isomorphism(
    a: EndoObject, b: EndoObject, phi: LinearRelation, psi: LinearRelation, t: int, k: int
) -> bool:
    """Check the four conditions making ``[phi, n]``, ``[psi, m]`` inverse with ``n + m = t``."""
    alpha, beta = a.alpha, b.alpha
    return (
        compose(phi, alpha) == compose(beta, phi)
        and compose(psi, beta) == compose(alpha, psi)
        and compose(compose(psi, phi), rel.power(alpha, k)) == rel.power(alpha, t + k)
        and compose(compose(phi, psi), rel.power(beta, k)) == rel.power(beta, t + k)
    )


def _relations_between(src: EndoObject, dst: EndoObject) -> list[LinearRelation]:
    n = src.dim + dst.dim
    return [
        LinearRelation(src.p, src.dim, dst.dim, g)
        for g in enumerate_subspaces(src.p, n)
        if is_endo_morphism(LinearRelation(src.p, src.dim, dst.dim, g), src, dst)
    ]


def find_szym_isomorphism(a: EndoObject, b: EndoObject):
    """Exhaustive search for ``(phi, psi, t, k)``; ``None`` when there is none."""
    if a.p != b.p:
        raise ValueError(f"objects over GF({int(a.p)}) and GF({int(b.p)})")
    p, n = int(a.p), a.dim + b.dim
    if p ** (n * n) > ORACLE_LIMIT:
        raise GuardError(f"oracle over GF({p})^{n} exceeds p^(n^2) <= 2^24")
    max_t, max_k = search_bounds(a.alpha, b.alpha)
    pa = powers(a.alpha, max_t + max_k + 1)
    pb = powers(b.alpha, max_t + max_k + 1)
    phis = _relations_between(a, b)
    psis = _relations_between(b, a)
    for phi in phis:
        for psi in psis:
            left = compose(psi, phi)
            right = compose(phi, psi)
            for k in range(max_k + 1):
                lk = compose(left, pa[k])
                rk = compose(right, pb[k])
                for t in range(max_t + 1):
                    if lk == pa[t + k] and rk == pb[t + k]:
                        return phi, psi, t, k
    return None


def oracle_szym_equiv(a: EndoObject, b: EndoObject) -> bool:
    return find_szym_isomorphism(a, b) is not None
