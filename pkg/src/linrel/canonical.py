"""Polynomials over GF(p) and similarity invariants of square matrices.

Invariant factors come from the Smith normal form of ``xI - M`` over GF(p)[x].
They form a complete similarity invariant, which is what decides whether two
bijections produced by the Leray functor are isomorphic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .field import FieldError, Prime, inv_mod
from .subspace import DTYPE, as_matrix, rref


def _strip(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Element of GF(p)[x]; ``coeffs`` lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]
    p: Prime

    def __post_init__(self):
        p = Prime(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _strip(int(c) % p for c in self.coeffs))

    @classmethod
    def constant(cls, c: int, p: int) -> "Poly":
        return cls((c,), p)

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls((0, 1), p)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "Poly") -> None:
        if other.p != self.p:
            raise FieldError(f"modulus mismatch: {int(self.p)} vs {int(other.p)}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)), self.p)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out), self.p)

    def scale(self, c: int) -> "Poly":
        return Poly(tuple(c * a for a in self.coeffs), self.p)

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = int(self.p)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly((), p), self
        inv_lead = inv_mod(other.lead, p)
        quot = [0] * (dq + 1)
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1] * inv_lead % p
            quot[shift] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - c * b) % p
        return Poly(tuple(quot), p), Poly(tuple(rem), p)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(inv_mod(self.lead, self.p))

    def __call__(self, m: np.ndarray) -> np.ndarray:
        """Evaluate at a square matrix by Horner's rule."""
        m = as_matrix(m)
        p = int(self.p)
        out = np.zeros_like(m)
        eye = np.eye(m.shape[0], dtype=DTYPE)
        for c in reversed(self.coeffs):
            out = (out @ m + c * eye) % p
        return out

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mon)
        return " + ".join(terms)


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    return divmod(f, g)


def poly_monic(f: Poly) -> Poly:
    return f.monic()


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor (``gcd(0, 0) == 0``)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def characteristic_matrix(m, p: int) -> list[list[Poly]]:
    """``xI - M`` as a matrix of polynomials."""
    m = as_matrix(m) % p
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return [
        [Poly((-int(m[i, j]), 1 if i == j else 0), p) for j in range(n)]
        for i in range(n)
    ]


def smith_diagonal(a: list[list[Poly]], p: int) -> list[Poly]:
    """Diagonal of the Smith normal form of a square polynomial matrix.

    Pivots are chosen of minimal degree, ties broken by (row, column) order,
    so the computation is deterministic.  Entries are monic on return.
    """
    a = [row[:] for row in a]
    n = len(a)
    zero = Poly((), p)
    diag = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if not a[i][j].is_zero() and (best is None or a[i][j].degree < best[0]):
                        best = (a[i][j].degree, i, j)
            if best is None:
                diag.extend([zero] * (n - t))
                return diag
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                if a[i][t].is_zero():
                    continue
                q, r = divmod(a[i][t], piv)
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                clean = clean and r.is_zero()
            for j in range(t + 1, n):
                if a[t][j].is_zero():
                    continue
                q, r = divmod(a[t][j], piv)
                for row in a:
                    row[j] = row[j] - q * row[t]
                clean = clean and r.is_zero()
            if not clean:
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n)
                 if not (a[i][j] % piv).is_zero()),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(a[t][t].monic())
    return diag


@dataclass(frozen=True)
class InvariantFactors:
    """Monic non-constant ``f_1 | f_2 | ... | f_r`` of a square matrix."""

    factors: tuple[Poly, ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def coefficient_lists(self) -> list[list[int]]:
        return [list(f.coeffs) for f in self.factors]

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.coeffs for f in self.factors)


def invariant_factors(m, p: int) -> InvariantFactors:
    p = Prime(p)
    diag = smith_diagonal(characteristic_matrix(m, p), p)
    return InvariantFactors(tuple(f for f in diag if f.degree > 0))


def minimal_polynomial(m, p: int) -> Poly:
    inv = invariant_factors(m, p)
    return inv[-1] if len(inv) else Poly((1,), p)


def characteristic_polynomial(m, p: int) -> Poly:
    out = Poly((1,), p)
    for f in invariant_factors(m, p):
        out = out * f
    return out


def similar(m, n, p: int) -> bool:
    m, n = as_matrix(m), as_matrix(n)
    if m.shape != n.shape:
        return False
    return invariant_factors(m, p) == invariant_factors(n, p)


def general_linear_group(n: int, p: int):
    """All invertible ``n x n`` matrices over GF(p) (brute force; tiny n only)."""
    for entries in itertools.product(range(p), repeat=n * n):
        g = np.asarray(entries, dtype=DTYPE).reshape(n, n)
        if rref(g, p).shape[0] == n:
            yield g
