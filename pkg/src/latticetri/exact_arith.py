"""Exact integer, rational and Gaussian-integer arithmetic.

Python ints are arbitrary precision, so nothing here can overflow.  Rationals
are :class:`fractions.Fraction`, which is already kept in lowest terms with a
positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

__all__ = [
    "Rational",
    "GaussianInt",
    "ONE_PLUS_I",
    "ONE_MINUS_I",
    "rational_new",
    "is_integer",
    "format_rational",
    "gcd_many",
    "int_sqrt_exact",
    "sigma",
    "divisible_by_one_plus_i",
    "divisible_by_one_minus_i",
    "split_power_of_two",
]

Rational = Fraction


def rational_new(num: int, den: int = 1) -> Fraction:
    """Build a canonical rational; raises ZeroDivisionError when ``den == 0``."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(int(num), int(den))


def is_integer(q: Fraction) -> bool:
    return q.denominator == 1


def format_rational(q: Fraction) -> str:
    """Render as ``p/q``, or just ``p`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def gcd_many(values: Iterable[int]) -> int:
    """Nonnegative gcd of all values; the gcd of nothing (or of zeros) is 0."""
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def int_sqrt_exact(n: int) -> Optional[int]:
    """Return ``r`` with ``r*r == n`` or ``None`` if ``n`` is not a square."""
    if n < 0:
        raise ValueError(f"square root of negative integer {n}")
    r = math.isqrt(n)
    return r if r * r == n else None


def sigma(v: Tuple[int, int]) -> int:
    """Parity map ``(x, y) -> (x + y) mod 2``."""
    x, y = v
    return (x + y) & 1


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    @classmethod
    def coerce(cls, value: "GaussianInt | int | Tuple[int, int]") -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        re, im = value
        return cls(re, im)

    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, tuple)):
            other = GaussianInt.coerce(other)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divmod_exact(self, other: "GaussianInt") -> Optional["GaussianInt"]:
        """Exact quotient ``self / other`` in Z[i], or ``None`` if it is not integral."""
        o = GaussianInt.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        p = self * o.conj()
        if p.re % n or p.im % n:
            return None
        return GaussianInt(p.re // n, p.im // n)

    def as_pair(self) -> Tuple[int, int]:
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


ONE_PLUS_I = GaussianInt(1, 1)
ONE_MINUS_I = GaussianInt(1, -1)


def divisible_by_one_plus_i(v: GaussianInt) -> bool:
    # (a+bi)(1+i) = (a-b) + (a+b)i; the coordinate sum 2a is always even
    return sigma(v.as_pair()) == 0


def divisible_by_one_minus_i(v: GaussianInt) -> bool:
    # 1-i = -i(1+i), an associate, so the predicate is the same
    return sigma(v.as_pair()) == 0


def split_power_of_two(v: GaussianInt) -> Tuple[int, GaussianInt]:
    """Write ``v = 2**k * w`` with the components of ``w`` not both even."""
    if v.re == 0 and v.im == 0:
        raise ValueError("cannot split powers of two out of zero")
    k = 0
    re, im = v.re, v.im
    while re % 2 == 0 and im % 2 == 0:
        re //= 2
        im //= 2
        k += 1
    return k, GaussianInt(re, im)
