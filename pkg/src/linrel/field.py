"""Exact arithmetic in the prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_PRIME = 2**16


class FieldError(ValueError):
    """Raised on invalid field data: non-prime modulus, mixed moduli, zero inversion."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Prime(int):
    """A prime modulus 2 <= p <= 2**16, checked at construction."""

    def __new__(cls, p: int) -> "Prime":
        if isinstance(p, Prime):
            return p
        if isinstance(p, bool) or int(p) != p:
            raise FieldError(f"modulus must be an integer, got {p!r}")
        p = int(p)
        if not 2 <= p <= MAX_PRIME:
            raise FieldError(f"modulus {p} outside [2, {MAX_PRIME}]")
        if not _is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        return super().__new__(cls, p)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@lru_cache(maxsize=None)
def inverse_table(p: int) -> tuple[int, ...]:
    """``table[a]`` is the inverse of ``a`` mod ``p``; ``table[0]`` is 0 as a placeholder."""
    return (0,) + tuple(inv_mod(a, p) for a in range(1, p))


@dataclass(frozen=True)
class Scalar:
    """An element of GF(p)."""

    value: int
    modulus: Prime

    def __post_init__(self):
        object.__setattr__(self, "modulus", Prime(self.modulus))
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Scalar):
            if other.modulus != self.modulus:
                raise FieldError(
                    f"modulus mismatch: {int(self.modulus)} vs {int(other.modulus)}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.value + b, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.value - b, self.modulus)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(b - self.value, self.modulus)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.value * b, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.value, self.modulus)

    def inverse(self) -> "Scalar":
        if self.value == 0:
            raise FieldError(f"inversion of zero in GF({int(self.modulus)})")
        return Scalar(inv_mod(self.value, self.modulus), self.modulus)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * Scalar(b, self.modulus).inverse()

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {int(self.modulus)})"


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()
