"""Generalized kernel/image, the functors LE and LM, and the Leray functor.

Quotients and subobjects are made concrete: ``gim`` is embedded into the
ambient space through its RREF basis (:func:`inclusion_relation`) and the
quotient by ``gker`` is identified with GF(p)^m through the complement-basis
convention (:func:`projection_relation`).  Both are ordinary relations, so
every conjugation below is plain relation composition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import relation as rel
from . import subspace as sp
from .field import Prime
from .relation import LinearRelation, RelationError, compose, inverse, power
from .subspace import DTYPE, Subspace


class NormalityError(AssertionError):
    """The Leray construction did not produce a bijection (a bug, never user error)."""


@dataclass(frozen=True)
class EndoObject:
    """A pair ``(GF(p)^dim, alpha)`` with ``alpha`` an endorelation."""

    alpha: LinearRelation

    def __post_init__(self):
        if not self.alpha.is_endo:
            raise RelationError(
                f"endo objects need an endorelation, got {self.alpha.dim_dom}->{self.alpha.dim_cod}"
            )

    @property
    def p(self) -> Prime:
        return self.alpha.p

    @property
    def dim(self) -> int:
        return self.alpha.dim_dom

    @classmethod
    def zero(cls, p: int) -> "EndoObject":
        """The zero object ``(0, id_0)``."""
        return cls(rel.identity(0, p))

    @classmethod
    def from_matrix(cls, m, p: int) -> "EndoObject":
        return cls(rel.from_matrix(m, p))


@dataclass(frozen=True)
class StabilizedChain:
    """Chain ``terms[0], terms[1], ...`` that is constant from ``index`` on."""

    terms: tuple[Subspace, ...]
    index: int

    @property
    def limit(self) -> Subspace:
        return self.terms[-1]


def stabilize(alpha: LinearRelation, start: Subspace) -> StabilizedChain:
    """Iterate ``S -> alpha(S)`` from ``start`` until two consecutive terms agree.

    Only used on monotone chains (``alpha^l(0)`` grows, ``alpha^l(A)``
    shrinks), which must settle within ``dim + 1`` steps.
    """
    terms = [start]
    for _ in range(alpha.dim_dom + 1):
        nxt = rel.image(alpha, terms[-1])
        if nxt == terms[-1]:
            return StabilizedChain(tuple(terms), len(terms) - 1)
        terms.append(nxt)
    raise AssertionError(f"chain failed to stabilize within {alpha.dim_dom + 1} steps")


def kernel_chains(obj: EndoObject) -> tuple[StabilizedChain, StabilizedChain]:
    """Chains ``alpha^l(0)`` and ``alpha^{-l}(0)``."""
    z = sp.zero(obj.dim, obj.p)
    return stabilize(obj.alpha, z), stabilize(inverse(obj.alpha), z)


def image_chains(obj: EndoObject) -> tuple[StabilizedChain, StabilizedChain]:
    """Chains ``alpha^l(A)`` and ``alpha^{-l}(A)``."""
    a = sp.full(obj.dim, obj.p)
    return stabilize(obj.alpha, a), stabilize(inverse(obj.alpha), a)


def gker(obj: EndoObject) -> Subspace:
    forward, backward = kernel_chains(obj)
    return forward.limit + backward.limit


def gim(obj: EndoObject) -> Subspace:
    forward, backward = image_chains(obj)
    return forward.limit & backward.limit


def inclusion_relation(s: Subspace) -> LinearRelation:
    """Embedding of GF(p)^(dim s) onto ``s`` that sends e_i to the i-th basis row."""
    return rel.from_matrix(s.basis.T.reshape(s.n, s.dim), s.p)


def projection_matrix(n: int, k: Subspace) -> np.ndarray:
    """Matrix of ``GF(p)^n -> GF(p)^m`` killing ``k``, ``m = n - dim k``.

    The complement basis vector at the j-th non-pivot column of ``k`` goes to
    e_j; a pivot column's e_c goes to minus its RREF row restricted to the
    non-pivot columns (the remainder of e_c after reduction).
    """
    p = int(k.p)
    pivots = k.pivots
    free = [c for c in range(n) if c not in set(pivots)]
    m = np.zeros((len(free), n), dtype=DTYPE)
    for j, c in enumerate(free):
        m[j, c] = 1
    for row, c in zip(k.basis, pivots):
        m[:, c] = (-row[free]) % p
    return m


def projection_relation(n: int, k: Subspace) -> LinearRelation:
    if k.n != n:
        raise sp.DimensionError(f"subspace of dim {k.n} in ambient {n}")
    return rel.from_matrix(projection_matrix(n, k), k.p)


def _conjugate(alpha: LinearRelation, into: LinearRelation) -> LinearRelation:
    # into o alpha o into^{-1}
    return compose(compose(into, alpha), inverse(into))


def LE(obj: EndoObject) -> EndoObject:
    """``(gim alpha, i^{-1} o alpha o i)``."""
    iota = inclusion_relation(gim(obj))
    return EndoObject(_conjugate(obj.alpha, inverse(iota)))


def LM(obj: EndoObject) -> EndoObject:
    """``(A / gker alpha, pi o alpha o pi^{-1})``."""
    pi = projection_relation(obj.dim, gker(obj))
    return EndoObject(_conjugate(obj.alpha, pi))


def is_endo_morphism(phi: LinearRelation, src: EndoObject, dst: EndoObject) -> bool:
    """Whether ``phi o alpha == beta o phi``."""
    if phi.dim_dom != src.dim or phi.dim_cod != dst.dim:
        return False
    return compose(phi, src.alpha) == compose(dst.alpha, phi)


def _require_morphism(phi, src, dst):
    if not is_endo_morphism(phi, src, dst):
        raise RelationError("relation does not intertwine the endorelations")


def le_morphism(phi: LinearRelation, src: EndoObject, dst: EndoObject) -> LinearRelation:
    """``LE(phi) = i_B^{-1} o phi o i_A``."""
    _require_morphism(phi, src, dst)
    i_a = inclusion_relation(gim(src))
    i_b = inclusion_relation(gim(dst))
    return compose(inverse(i_b), compose(phi, i_a))


def lm_morphism(phi: LinearRelation, src: EndoObject, dst: EndoObject) -> LinearRelation:
    """``LM(phi) = pi_B o phi o pi_A^{-1}``."""
    _require_morphism(phi, src, dst)
    pi_a = projection_relation(src.dim, gker(src))
    pi_b = projection_relation(dst.dim, gker(dst))
    return compose(pi_b, compose(phi, inverse(pi_a)))


@dataclass(frozen=True)
class LerayForm:
    """The bijection ``L(A, alpha)`` as a ``dim x dim`` invertible matrix.

    The basis is the one induced by the construction, so two forms describe
    the same class exactly when their matrices are similar; compare them by
    :attr:`invariant_factors`, not by matrix entries.
    """

    p: Prime
    dim: int
    matrix: np.ndarray = field(compare=False)

    @property
    def invariant_factors(self):
        from .canonical import invariant_factors

        return invariant_factors(self.matrix, self.p)

    def to_document(self) -> dict:
        return {
            "p": int(self.p),
            "dim": self.dim,
            "matrix": self.matrix.tolist(),
            "invariant_factors": [list(f.coeffs) for f in self.invariant_factors],
        }


def _bijection_form(obj: EndoObject, what: str) -> LerayForm:
    beta = obj.alpha
    if not (rel.is_matching(beta) and rel.is_correspondence(beta)):
        raise NormalityError(f"{what} did not produce a bijection: {beta!r}")
    m = rel.to_matrix(beta)
    return LerayForm(beta.p, obj.dim, m)


def leray(obj: EndoObject) -> LerayForm:
    """``L = LE o LM``; the result is always a bijection on a finite-dimensional space."""
    return _bijection_form(LE(LM(obj)), "LE o LM")


def leray_reversed(obj: EndoObject) -> LerayForm:
    """``LM o LE``; for finite-dimensional carriers also a bijection."""
    return _bijection_form(LM(LE(obj)), "LM o LE")


# Szymczak witnesses ------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Relations ``phi: A -o B`` and ``psi: B -o A`` with shift ``k`` each way."""

    phi: LinearRelation
    psi: LinearRelation
    k: int
    target: EndoObject


def szym_witness_LE(obj: EndoObject) -> Witness:
    """``phi = i^{-1} o alpha^k``, ``psi = alpha^k o i`` with ``k`` from the image chains."""
    forward, backward = image_chains(obj)
    k = max(forward.index, backward.index)
    iota = inclusion_relation(forward.limit & backward.limit)
    ak = power(obj.alpha, k)
    target = EndoObject(_conjugate(obj.alpha, inverse(iota)))
    return Witness(compose(inverse(iota), ak), compose(ak, iota), k, target)


def szym_witness_LM(obj: EndoObject) -> Witness:
    """``phi = pi o alpha^k``, ``psi = alpha^k o pi^{-1}`` with ``k`` from the kernel chains."""
    forward, backward = kernel_chains(obj)
    k = max(forward.index, backward.index)
    pi = projection_relation(obj.dim, forward.limit + backward.limit)
    ak = power(obj.alpha, k)
    target = EndoObject(_conjugate(obj.alpha, pi))
    return Witness(compose(pi, ak), compose(ak, inverse(pi)), k, target)


def witness_equations(obj: EndoObject, w: Witness) -> dict[str, bool]:
    """The four identities (a)-(d) that make ``[phi, k]`` and ``[psi, k]`` inverse.

    (a) ``beta o phi == phi o alpha``
    (b) ``psi o beta == alpha o psi``
    (c) ``psi o phi == alpha^{2k}``
    (d) ``beta^{2k} == phi o psi``
    """
    alpha, beta = obj.alpha, w.target.alpha
    return {
        "a": compose(beta, w.phi) == compose(w.phi, alpha),
        "b": compose(w.psi, beta) == compose(alpha, w.psi),
        "c": compose(w.psi, w.phi) == power(alpha, 2 * w.k),
        "d": power(beta, 2 * w.k) == compose(w.phi, w.psi),
    }
