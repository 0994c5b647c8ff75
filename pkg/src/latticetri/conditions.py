"""The six lattice/integrality conditions of a lattice triangle.

Two evaluation paths share one bit layout:

* :func:`classify` works on a single :class:`Triangle` through the exact
  rational centers.  It is the reference.
* :func:`classify_arrays` evaluates many origin-based triangles at once with
  int64 numpy arithmetic, using only divisibility tests on the integer
  numerator/denominator of the circumcenter.  It is what the exhaustive
  scans run on, and it is exact for coordinates up to ``MAX_ARRAY_BOUND``.
"""

from __future__ import annotations

import json
from dataclasses import astuple, dataclass, fields

import numpy as np

from .centers import (
    Triangle,
    area_twice,
    centroid,
    circumcenter,
    circumradius_squared,
    orthocenter,
)
from .exact_arith import gcd_many, int_sqrt_exact, sigma

__all__ = [
    "CONDITION_NAMES",
    "CONDITION_LABELS",
    "F", "G", "H", "R", "AREA", "EVEN", "GCD3",
    "ConditionVector",
    "classify",
    "primitive_gcd",
    "classify_arrays",
    "MAX_ARRAY_BOUND",
]

CONDITION_NAMES = ("f_lattice", "g_lattice", "h_lattice",
                   "circumradius_integer", "area_integer", "even_side_sums")
# short names used by the scan expression language and the text matrix
CONDITION_LABELS = ("f", "g", "h", "r", "area", "even")

F, G, H, R, AREA, EVEN = (1 << i for i in range(6))
# extra bit, outside the six conditions: 3 divides the primitive gcd
GCD3 = 1 << 6

# |a|, |b| <= 4 B^3 so a^2 + b^2 <= 32 B^6 stays well inside int64
MAX_ARRAY_BOUND = 500


@dataclass(frozen=True)
class ConditionVector:
    f_lattice: bool
    g_lattice: bool
    h_lattice: bool
    circumradius_integer: bool
    area_integer: bool
    even_side_sums: bool

    @property
    def mask(self) -> int:
        return sum(1 << i for i, flag in enumerate(astuple(self)) if flag)

    @classmethod
    def from_mask(cls, mask: int) -> "ConditionVector":
        return cls(*(bool(mask >> i & 1) for i in range(6)))

    @classmethod
    def from_bits(cls, bits: str) -> "ConditionVector":
        if len(bits) != 6 or set(bits) - {"0", "1"}:
            raise ValueError(f"not a 6-character bitstring: {bits!r}")
        return cls(*(c == "1" for c in bits))

    def bits(self) -> str:
        return "".join("1" if flag else "0" for flag in astuple(self))

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        return self.bits()


def classify(t: Triangle) -> ConditionVector:
    r2 = circumradius_squared(t)
    r_int = r2.denominator == 1 and int_sqrt_exact(r2.numerator) is not None
    x1, y1, x2, y2 = t.side_vectors()
    return ConditionVector(
        f_lattice=circumcenter(t).is_lattice(),
        g_lattice=centroid(t).is_lattice(),
        h_lattice=orthocenter(t).is_lattice(),
        circumradius_integer=r_int,
        area_integer=area_twice(t) % 2 == 0,
        even_side_sums=sigma((x1, y1)) == 0 and sigma((x2, y2)) == 0,
    )


def primitive_gcd(t: Triangle) -> int:
    return gcd_many(t.side_vectors())


def _isqrt_floor(q: np.ndarray) -> np.ndarray:
    # float estimate, then exact integer correction
    r = np.floor(np.sqrt(q.astype(np.float64))).astype(np.int64)
    for _ in range(4):
        r = np.where(r * r > q, r - 1, r)
        r = np.where((r + 1) * (r + 1) <= q, r + 1, r)
    return r


def classify_arrays(x1, y1, x2, y2, with_gcd3: bool = True) -> np.ndarray:
    """Condition masks for origin-based triangles ``O, (x1,y1), (x2,y2)``.

    Inputs are int64 arrays of equal shape with nonzero cross product.
    Returns a uint8 array; bit ``i`` is condition ``CONDITION_NAMES[i]`` and
    bit 6 (``GCD3``) marks ``3 | gcd(x1, y1, x2, y2)``.
    """
    x1, y1, x2, y2 = (np.asarray(v, dtype=np.int64) for v in (x1, y1, x2, y2))
    n1 = x1 * x1 + y1 * y1
    n2 = x2 * x2 + y2 * y2
    a = n2 * x1 - n1 * x2
    b = n2 * y1 - n1 * y2
    d = x2 * y1 - x1 * y2
    if np.any(d == 0):
        raise ValueError("degenerate triangle in batch")
    d2 = 2 * d
    # F = (b, -a) / 2d ;  H = (x1 + x2 - b/d, y1 + y2 + a/d)
    f = (a % d2 == 0) & (b % d2 == 0)
    h = (a % d == 0) & (b % d == 0)
    g = ((x1 + x2) % 3 == 0) & ((y1 + y2) % 3 == 0)
    # R^2 = (a^2 + b^2) / 4d^2 must be a perfect square integer
    s = a * a + b * b
    den = d2 * d2
    r_int = s % den == 0
    q = np.where(r_int, s // den, 0)
    root = _isqrt_floor(q)
    r = r_int & (root * root == q)
    area = d % 2 == 0
    even = ((x1 + y1) % 2 == 0) & ((x2 + y2) % 2 == 0)
    mask = (f.astype(np.uint8)
            | g.astype(np.uint8) << 1
            | h.astype(np.uint8) << 2
            | r.astype(np.uint8) << 3
            | area.astype(np.uint8) << 4
            | even.astype(np.uint8) << 5)
    if with_gcd3:
        gcd = np.gcd(np.gcd(x1, y1), np.gcd(x2, y2))
        mask |= (gcd % 3 == 0).astype(np.uint8) << 6
    return mask
