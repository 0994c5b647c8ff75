"""Exact triangle centers for lattice triangles.

Every quantity is computed with integers and only turned into a
:class:`~fractions.Fraction` at the very end.  The circumcenter uses the
complex form

    F = v1 v2 (conj(v2) - conj(v1)) / (v1 conj(v2) - conj(v1) v2)

with the third vertex moved to the origin, expanded into Cartesian integer
numerator and denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from .exact_arith import gcd_many

__all__ = [
    "DegenerateTriangleError",
    "EulerLineUndefinedError",
    "LatticePoint",
    "RationalPoint",
    "Triangle",
    "RationalLine",
    "circumcenter_parts",
    "centroid",
    "circumcenter",
    "orthocenter",
    "area_twice",
    "circumradius_squared",
    "euler_line",
    "euler_line_lattice_point",
    "line_through",
]


class DegenerateTriangleError(ValueError):
    """Raised for collinear vertices."""


class EulerLineUndefinedError(ValueError):
    """Raised when circumcenter and centroid coincide."""


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticePoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticePoint(self.x - other[0], self.y - other[1])


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "RationalPoint":
        return cls(Fraction(x), Fraction(y))

    def is_lattice(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def dist2(self, p) -> Fraction:
        dx = self.x - p[0]
        dy = self.y - p[1]
        return dx * dx + dy * dy


def _cross(ax: int, ay: int, bx: int, by: int) -> int:
    return ax * by - ay * bx


@dataclass(frozen=True)
class Triangle:
    """Three lattice vertices, guaranteed non-collinear."""

    v1: LatticePoint
    v2: LatticePoint
    v3: LatticePoint = LatticePoint(0, 0)

    def __post_init__(self):
        for name in ("v1", "v2", "v3"):
            p = getattr(self, name)
            if not isinstance(p, LatticePoint):
                object.__setattr__(self, name, LatticePoint(int(p[0]), int(p[1])))
        if self.cross() == 0:
            raise DegenerateTriangleError(f"collinear vertices {self.vertices()}")

    @classmethod
    def from_origin(cls, x1: int, y1: int, x2: int, y2: int) -> "Triangle":
        return cls(LatticePoint(x1, y1), LatticePoint(x2, y2), LatticePoint(0, 0))

    @classmethod
    def from_coords(cls, coords) -> "Triangle":
        """Six integers ``x1 y1 x2 y2 x3 y3``."""
        c = [int(v) for v in coords]
        if len(c) != 6:
            raise ValueError(f"expected 6 coordinates, got {len(c)}")
        return cls(LatticePoint(c[0], c[1]), LatticePoint(c[2], c[3]), LatticePoint(c[4], c[5]))

    def vertices(self) -> Tuple[LatticePoint, LatticePoint, LatticePoint]:
        return (self.v1, self.v2, self.v3)

    def side_vectors(self) -> Tuple[int, int, int, int]:
        """``(x1, y1, x2, y2)`` of ``v1 - v3`` and ``v2 - v3``."""
        return (self.v1.x - self.v3.x, self.v1.y - self.v3.y,
                self.v2.x - self.v3.x, self.v2.y - self.v3.y)

    def cross(self) -> int:
        x1, y1, x2, y2 = self.side_vectors()
        return _cross(x1, y1, x2, y2)

    def translate(self, w) -> "Triangle":
        return Triangle(self.v1 + w, self.v2 + w, self.v3 + w)

    def scale(self, k: int) -> "Triangle":
        return Triangle(*(LatticePoint(k * p.x, k * p.y) for p in self.vertices()))

    def map(self, f) -> "Triangle":
        """Apply a point map ``(x, y) -> (x', y')`` to every vertex."""
        return Triangle(*(LatticePoint(*f(p.x, p.y)) for p in self.vertices()))

    def as_tuple(self) -> Tuple[int, ...]:
        return (*self.v1, *self.v2, *self.v3)

    def __str__(self):
        return "[" + ", ".join(f"({p.x},{p.y})" for p in self.vertices()) + "]"


def circumcenter_parts(x1: int, y1: int, x2: int, y2: int) -> Tuple[int, int, int]:
    """Integer pieces ``(a, b, d)`` of the origin-based circumcenter.

    ``(a, b) = |v2|^2 v1 - |v1|^2 v2`` is the numerator and the denominator is
    ``2i d`` with ``d = x2 y1 - x1 y2``, so ``F = (b / 2d, -a / 2d)``.
    """
    n1 = x1 * x1 + y1 * y1
    n2 = x2 * x2 + y2 * y2
    a = n2 * x1 - n1 * x2
    b = n2 * y1 - n1 * y2
    d = x2 * y1 - x1 * y2
    return a, b, d


def centroid(t: Triangle) -> RationalPoint:
    return RationalPoint(Fraction(t.v1.x + t.v2.x + t.v3.x, 3),
                         Fraction(t.v1.y + t.v2.y + t.v3.y, 3))


def circumcenter(t: Triangle) -> RationalPoint:
    x1, y1, x2, y2 = t.side_vectors()
    a, b, d = circumcenter_parts(x1, y1, x2, y2)
    if d == 0:
        raise DegenerateTriangleError(f"collinear vertices {t.vertices()}")
    d2 = 2 * d
    return RationalPoint(Fraction(b + d2 * t.v3.x, d2), Fraction(d2 * t.v3.y - a, d2))


def orthocenter(t: Triangle) -> RationalPoint:
    g = centroid(t)
    f = circumcenter(t)
    return RationalPoint(3 * g.x - 2 * f.x, 3 * g.y - 2 * f.y)


def area_twice(t: Triangle) -> int:
    return abs(t.cross())


def circumradius_squared(t: Triangle) -> Fraction:
    return circumcenter(t).dist2(t.v3)


@dataclass(frozen=True)
class RationalLine:
    """The line ``a*x + b*y = c`` with coprime integer coefficients."""

    a: int
    b: int
    c: int

    def contains(self, p) -> bool:
        return self.a * Fraction(p[0]) + self.b * Fraction(p[1]) == self.c

    def lattice_point(self) -> Optional[LatticePoint]:
        """A lattice point on the line, minimal ``|x|`` then minimal ``|y|``."""
        a, b, c = self.a, self.b, self.c
        if b == 0:
            return LatticePoint(c // a, 0) if c % a == 0 else None
        if a == 0:
            return LatticePoint(0, c // b) if c % b == 0 else None
        g, u, _ = _ext_gcd(a, b)
        if c % g:
            return None
        # every solution has x ≡ x0 (mod |b|/g)
        step = abs(b) // g
        x0 = (u * (c // g)) % step
        best = None
        for x in (x0, x0 - step):
            rem = c - a * x
            if rem % b:
                continue
            key = (abs(x), abs(rem // b))
            if best is None or key < best[0]:
                best = (key, LatticePoint(x, rem // b))
        return best[1]

    def __str__(self):
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}x {sign} {abs(self.b)}y = {self.c}"


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """``(g, u, v)`` with ``a*u + b*v == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def line_through(p: RationalPoint, q: RationalPoint) -> RationalLine:
    """Canonical integer line through two distinct rational points."""
    if p == q:
        raise ValueError("a line needs two distinct points")
    a = q.y - p.y
    b = p.x - q.x
    c = a * p.x + b * p.y
    scale = math.lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = int(a * scale), int(b * scale), int(c * scale)
    g = gcd_many((ia, ib, ic))
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return RationalLine(ia, ib, ic)


def euler_line(t: Triangle) -> RationalLine:
    f = circumcenter(t)
    g = centroid(t)
    if f == g:
        raise EulerLineUndefinedError(f"circumcenter equals centroid for {t}")
    return line_through(f, g)


def euler_line_lattice_point(t: Triangle) -> Optional[LatticePoint]:
    return euler_line(t).lattice_point()
