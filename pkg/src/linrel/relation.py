"""Linear relations between GF(p)-vector spaces.

A relation ``phi: A -o B`` is a subspace of ``A (+) B``; its graph is stored as a
:class:`~linrel.subspace.Subspace` of GF(p)^(dim_dom + dim_cod) with the domain
coordinates first.  Relations compose like binary relations
(``(psi @ phi)`` is "first phi, then psi") and every relation has an inverse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import subspace as sp
from .field import Prime
from .subspace import DTYPE, DimensionError, Subspace


class RelationError(ValueError):
    """Raised when a relation operation's precondition fails."""


class DocumentError(ValueError):
    """Raised on malformed relation documents."""


@dataclass(frozen=True, eq=True)
class LinearRelation:
    p: Prime
    dim_dom: int
    dim_cod: int
    graph: Subspace

    def __post_init__(self):
        if self.graph.n != self.dim_dom + self.dim_cod:
            raise DimensionError(
                f"graph ambient {self.graph.n} != {self.dim_dom} + {self.dim_cod}"
            )
        if self.graph.p != self.p:
            raise DimensionError("graph modulus differs from relation modulus")

    def __repr__(self) -> str:
        return (
            f"LinearRelation(p={int(self.p)}, {self.dim_dom}->{self.dim_cod}, "
            f"graph={self.graph.basis.tolist()})"
        )

    @property
    def is_endo(self) -> bool:
        return self.dim_dom == self.dim_cod

    def __matmul__(self, other: "LinearRelation") -> "LinearRelation":
        return compose(self, other)

    def __pow__(self, k: int) -> "LinearRelation":
        return power(self, k)

    def __invert__(self) -> "LinearRelation":
        return inverse(self)

    def contains(self, x, y) -> bool:
        """Whether ``(x, y)`` is in the relation."""
        return sp.contains(self.graph, np.concatenate([np.asarray(x, DTYPE), np.asarray(y, DTYPE)]))


def from_graph(graph: Subspace, dim_dom: int, dim_cod: int) -> LinearRelation:
    return LinearRelation(graph.p, dim_dom, dim_cod, graph)


def from_generators(p: int, dim_dom: int, dim_cod: int, generators) -> LinearRelation:
    p = Prime(p)
    return LinearRelation(p, dim_dom, dim_cod, sp.span(generators, dim_dom + dim_cod, p))


def from_matrix(m, p: int) -> LinearRelation:
    """Graph ``{(x, M x)}`` of the map with matrix ``m`` (shape cod x dom)."""
    p = Prime(p)
    m = sp.as_matrix(m) % p
    cod, dom = m.shape
    basis = np.hstack([np.eye(dom, dtype=DTYPE), m.T.reshape(dom, cod)])
    return LinearRelation(p, dom, cod, Subspace(p, dom + cod, basis))


def identity(n: int, p: int) -> LinearRelation:
    return from_matrix(np.eye(n, dtype=DTYPE), p)


def top(dim_dom: int, dim_cod: int, p: int) -> LinearRelation:
    p = Prime(p)
    return LinearRelation(p, dim_dom, dim_cod, sp.full(dim_dom + dim_cod, p))


def bottom(dim_dom: int, dim_cod: int, p: int) -> LinearRelation:
    p = Prime(p)
    return LinearRelation(p, dim_dom, dim_cod, sp.zero(dim_dom + dim_cod, p))


def compose(psi: LinearRelation, phi: LinearRelation) -> LinearRelation:
    """``psi o phi``: pairs ``(a, c)`` with ``(a, b)`` in phi and ``(b, c)`` in psi.

    Both graphs are stacked in the block order ``[B | A | C]`` as rows
    ``(b, a, 0)`` and ``(-b', 0, c)``; after row reduction the rows with a
    zero ``B`` block span exactly the composite.
    """
    if phi.dim_cod != psi.dim_dom:
        raise DimensionError(
            f"cannot compose: phi lands in dim {phi.dim_cod}, psi starts at dim {psi.dim_dom}"
        )
    if phi.p != psi.p:
        raise DimensionError("cannot compose relations over different fields")
    p = int(phi.p)
    a, b, c = phi.dim_dom, phi.dim_cod, psi.dim_cod
    g, h = phi.graph.basis, psi.graph.basis
    top_rows = np.hstack([g[:, a:], g[:, :a], np.zeros((g.shape[0], c), DTYPE)])
    bot_rows = np.hstack([(-h[:, :b]) % p, np.zeros((h.shape[0], a), DTYPE), h[:, b:]])
    r = sp.rref(np.vstack([top_rows, bot_rows]), p)
    tail = r[~r[:, :b].any(axis=1), b:]
    return LinearRelation(phi.p, a, c, Subspace(p, a + c, tail))


def inverse(phi: LinearRelation) -> LinearRelation:
    a, b = phi.dim_dom, phi.dim_cod
    swapped = np.hstack([phi.graph.basis[:, a:], phi.graph.basis[:, :a]])
    return LinearRelation(phi.p, b, a, Subspace(phi.p, a + b, sp.rref(swapped, phi.p)))


def _subspace_as_relation(s: Subspace) -> LinearRelation:
    # S viewed as a relation from the zero space: graph {(., s) : s in S}
    return LinearRelation(s.p, 0, s.n, s)


def image(phi: LinearRelation, s: Subspace) -> Subspace:
    """``phi(S)``: everything related to some element of ``S``."""
    if s.n != phi.dim_dom or s.p != phi.p:
        raise DimensionError(f"subspace of dim {s.n} is not in the domain (dim {phi.dim_dom})")
    return compose(phi, _subspace_as_relation(s)).graph


def preimage(phi: LinearRelation, s: Subspace) -> Subspace:
    return image(inverse(phi), s)


def apply(phi: LinearRelation, x) -> np.ndarray | None:
    """One element of ``phi(x)``, or ``None`` if ``phi(x)`` is empty.

    The full image set is ``apply(phi, x) + indeterminacy(phi)``.
    """
    x = np.asarray(x, dtype=DTYPE).reshape(-1)
    if x.shape[0] != phi.dim_dom:
        raise DimensionError(f"vector of length {x.shape[0]}, domain has dim {phi.dim_dom}")
    residual = sp.reduce_vector(phi.graph, np.concatenate([x, np.zeros(phi.dim_cod, DTYPE)]))
    if residual[: phi.dim_dom].any():
        return None
    return (-residual[phi.dim_dom:]) % phi.p


def indeterminacy(phi: LinearRelation) -> Subspace:
    """``phi(0)``."""
    return image(phi, sp.zero(phi.dim_dom, phi.p))


def kernel(phi: LinearRelation) -> Subspace:
    """``phi^{-1}(0)``."""
    return preimage(phi, sp.zero(phi.dim_cod, phi.p))


def domain_of_definition(phi: LinearRelation) -> Subspace:
    """``phi^{-1}(B)``: the points with at least one image."""
    return sp.project(phi.graph, range(phi.dim_dom))


def range_(phi: LinearRelation) -> Subspace:
    """``phi(A)``."""
    return sp.project(phi.graph, range(phi.dim_dom, phi.dim_dom + phi.dim_cod))


def is_single_valued(phi: LinearRelation) -> bool:
    return indeterminacy(phi).dim == 0


def is_injective(phi: LinearRelation) -> bool:
    return kernel(phi).dim == 0


def is_total(phi: LinearRelation) -> bool:
    return domain_of_definition(phi).dim == phi.dim_dom


def is_surjective(phi: LinearRelation) -> bool:
    return range_(phi).dim == phi.dim_cod


def is_matching(phi: LinearRelation) -> bool:
    return is_single_valued(phi) and is_injective(phi)


def is_correspondence(phi: LinearRelation) -> bool:
    return is_total(phi) and is_surjective(phi)


def is_isomorphism(phi: LinearRelation) -> bool:
    return is_matching(phi) and is_correspondence(phi)


def _require_endo(alpha: LinearRelation) -> None:
    if not alpha.is_endo:
        raise RelationError(f"expected an endorelation, got {alpha.dim_dom}->{alpha.dim_cod}")


def power(alpha: LinearRelation, k: int) -> LinearRelation:
    """``alpha^k``; negative ``k`` means powers of the inverse relation."""
    _require_endo(alpha)
    if k < 0:
        alpha, k = inverse(alpha), -k
    result = identity(alpha.dim_dom, alpha.p)
    base = alpha
    while k:
        if k & 1:
            result = compose(base, result)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def to_matrix(phi: LinearRelation) -> np.ndarray:
    """Matrix (cod x dom) of a single-valued, total relation."""
    if not (is_single_valued(phi) and is_total(phi)):
        raise RelationError("only single-valued total relations have a matrix")
    # graph RREF is [I | M^T] once the relation is the graph of a map
    return np.ascontiguousarray(phi.graph.basis[:, phi.dim_dom:].T)


# JSON relation documents --------------------------------------------------


def to_document(phi: LinearRelation) -> dict:
    return {
        "p": int(phi.p),
        "dim_dom": phi.dim_dom,
        "dim_cod": phi.dim_cod,
        "generators": phi.graph.basis.tolist(),
    }


def from_document(doc) -> LinearRelation:
    """Load a relation document; generators are canonicalized via ``span``."""
    if not isinstance(doc, dict):
        raise DocumentError("relation document must be a JSON object")
    missing = {"p", "dim_dom", "dim_cod", "generators"} - doc.keys()
    if missing:
        raise DocumentError(f"relation document lacks {sorted(missing)}")
    try:
        p = Prime(doc["p"])
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    dd, dc, gens = doc["dim_dom"], doc["dim_cod"], doc["generators"]
    if not all(isinstance(d, int) and not isinstance(d, bool) and d >= 0 for d in (dd, dc)):
        raise DocumentError("dim_dom and dim_cod must be nonnegative integers")
    if not isinstance(gens, list):
        raise DocumentError("generators must be a list of vectors")
    for g in gens:
        if not isinstance(g, list) or len(g) != dd + dc:
            raise DocumentError(f"generator {g!r} must be a list of length {dd + dc}")
        if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < p for x in g):
            raise DocumentError(f"generator {g!r} must have integer entries in [0, {int(p)})")
    return from_generators(p, dd, dc, gens)


def dumps(phi: LinearRelation) -> str:
    return json.dumps(to_document(phi))


def loads(text: str) -> LinearRelation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_document(doc)
