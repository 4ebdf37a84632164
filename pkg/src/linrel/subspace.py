"""Subspaces of GF(p)^n held in canonical reduced row-echelon form.

Vectors and matrices are plain ``numpy`` integer arrays with entries in
``[0, p)``.  A :class:`Subspace` keeps its basis in RREF (monic pivots,
strictly increasing pivot columns, no zero rows), so two subspaces are equal
exactly when their basis arrays are identical.  That makes subspaces hashable
and lets classification code fold over them with plain dicts.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence

import numpy as np

from .field import Prime, inverse_table

DTYPE = np.int64
ENUMERATION_LIMIT = 2**20


class DimensionError(ValueError):
    """Raised when ambient dimensions or moduli of operands disagree."""


class GuardError(ValueError):
    """Raised when an exhaustive enumeration would exceed its size guard."""


def as_matrix(rows, ncols: int | None = None) -> np.ndarray:
    """Coerce ``rows`` to a 2-d integer array (an empty list needs ``ncols``)."""
    a = np.asarray(rows, dtype=DTYPE)
    if a.ndim == 1:
        if a.size == 0:
            a = a.reshape(0, 0 if ncols is None else ncols)
        else:
            a = a.reshape(1, -1)
    if a.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {a.shape}")
    if ncols is not None and a.shape[1] != ncols:
        if a.shape[0] == 0:
            return np.zeros((0, ncols), dtype=DTYPE)
        raise DimensionError(f"expected {ncols} columns, got {a.shape[1]}")
    return a


def rref(m, p: int) -> np.ndarray:
    """Reduced row-echelon form of ``m`` over GF(p) with zero rows dropped."""
    a = as_matrix(m) % p
    rows, cols = a.shape
    inv = inverse_table(p)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = (a[r] * inv[lead]) % p
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a -= np.outer(col, a[r])
            a %= p
        r += 1
    return a[:r]


def pivot_columns(basis: np.ndarray) -> tuple[int, ...]:
    return tuple(int(np.flatnonzero(row)[0]) for row in basis)


class Subspace:
    """A subspace of GF(p)^n with a canonical RREF basis.

    Build one with :func:`span`; the constructor assumes its ``basis`` is
    already canonical.
    """

    __slots__ = ("p", "n", "basis", "_key")

    def __init__(self, p: int, n: int, basis: np.ndarray):
        self.p = Prime(p)
        self.n = int(n)
        basis = np.ascontiguousarray(basis, dtype=DTYPE)
        if self.n == 0:
            basis = np.zeros((0, 0), dtype=DTYPE)
        elif basis.ndim != 2 or basis.shape[1] != self.n:
            basis = basis.reshape(-1, self.n)
        basis.flags.writeable = False
        self.basis = basis
        self._key = (int(self.p), self.n, basis.shape[0], basis.tobytes())

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> tuple[int, ...]:
        return pivot_columns(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Subspace(p={int(self.p)}, n={self.n}, basis={self.basis.tolist()})"

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return is_subspace(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def elements(self) -> Iterator[tuple[int, ...]]:
        """Every vector of the subspace (there are ``p**dim`` of them)."""
        p = int(self.p)
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = np.asarray(coeffs, dtype=DTYPE).reshape(1, -1) @ self.basis % p
            yield tuple(int(x) for x in v.reshape(-1)) if self.dim else (0,) * self.n


def span(vectors, n: int, p: int) -> Subspace:
    """The canonical subspace spanned by ``vectors`` (each of length ``n``)."""
    m = as_matrix(vectors, ncols=n) if len(vectors) else np.zeros((0, n), DTYPE)
    return Subspace(p, n, rref(m, p))


def zero(n: int, p: int) -> Subspace:
    return Subspace(p, n, np.zeros((0, n), DTYPE))


def full(n: int, p: int) -> Subspace:
    return Subspace(p, n, np.eye(n, dtype=DTYPE))


def _check_same(s: Subspace, t: Subspace) -> None:
    if s.p != t.p or s.n != t.n:
        raise DimensionError(
            f"operands live in GF({int(s.p)})^{s.n} and GF({int(t.p)})^{t.n}"
        )


def reduce_vector(s: Subspace, v) -> np.ndarray:
    """Remainder of ``v`` after clearing the pivot columns of ``s``."""
    v = np.asarray(v, dtype=DTYPE).reshape(-1) % s.p
    if v.shape[0] != s.n:
        raise DimensionError(f"vector of length {v.shape[0]} in ambient dimension {s.n}")
    v = v.copy()
    for row, c in zip(s.basis, s.pivots):
        if v[c]:
            v = (v - v[c] * row) % s.p
    return v


def contains(s: Subspace, v) -> bool:
    return not reduce_vector(s, v).any()


def is_subspace(s: Subspace, t: Subspace) -> bool:
    """Whether ``s`` is contained in ``t``."""
    _check_same(s, t)
    return all(contains(t, row) for row in s.basis)


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_same(s, t)
    if s.dim == 0:
        return t
    if t.dim == 0:
        return s
    return Subspace(s.p, s.n, rref(np.vstack([s.basis, t.basis]), s.p))


def intersect(s: Subspace, t: Subspace) -> Subspace:
    """Intersection by the Zassenhaus block method.

    Row-reducing ``[[S, S], [T, 0]]`` leaves rows with a zero left half whose
    right halves form the RREF basis of ``S & T``.
    """
    _check_same(s, t)
    n, p = s.n, int(s.p)
    if s.dim == 0 or t.dim == 0:
        return zero(n, p)
    block = np.vstack([
        np.hstack([s.basis, s.basis]),
        np.hstack([t.basis, np.zeros_like(t.basis)]),
    ])
    r = rref(block, p)
    tail = r[~r[:, :n].any(axis=1), n:]
    return Subspace(p, n, tail)


def equals(s: Subspace, t: Subspace) -> bool:
    _check_same(s, t)
    return s == t


def dim(s: Subspace) -> int:
    return s.dim


def complement_basis(s: Subspace) -> list[np.ndarray]:
    """Standard basis vectors at the non-pivot columns of ``s``."""
    piv = set(s.pivots)
    eye = np.eye(s.n, dtype=DTYPE)
    return [eye[c] for c in range(s.n) if c not in piv]


def project(s: Subspace, coords: Sequence[int]) -> Subspace:
    """Image of ``s`` under the coordinate projection onto ``coords``."""
    coords = list(coords)
    return Subspace(s.p, len(coords), rref(s.basis[:, coords], s.p))


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspace_count(n: int, p: int) -> int:
    """Number of subspaces of GF(p)^n."""
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def pivot_patterns(n: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), r))


def subspaces_with_pivots(p: int, n: int, pivots: tuple[int, ...]) -> Iterator[Subspace]:
    """All subspaces of GF(p)^n whose RREF has exactly these pivot columns."""
    pivset = set(pivots)
    free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivset]
    base = np.zeros((len(pivots), n), dtype=DTYPE)
    for i, c in enumerate(pivots):
        base[i, c] = 1
    for values in itertools.product(range(p), repeat=len(free)):
        m = base.copy()
        for (i, j), x in zip(free, values):
            m[i, j] = x
        yield Subspace(p, n, m)


def _check_guard(p: int, n: int) -> None:
    if p**n > ENUMERATION_LIMIT:
        raise GuardError(f"enumerating subspaces of GF({p})^{n} exceeds p^n <= 2^20")


def enumerate_subspaces(p: int, n: int) -> Iterator[Subspace]:
    """Every subspace of GF(p)^n exactly once.

    Order is by dimension, then lexicographic on the flattened RREF basis.
    Matrices are generated per pivot pattern, never by deduplicating spans.
    """
    p = Prime(p)
    _check_guard(p, n)
    for r in range(n + 1):
        batch: list[Subspace] = []
        for pivots in pivot_patterns(n, r):
            batch.extend(subspaces_with_pivots(p, n, pivots))
        batch.sort(key=lambda s: tuple(s.basis.ravel().tolist()))
        yield from batch

