"""Exhaustive enumeration of lattice triangles inside a coordinate box.

Triangles are enumerated as ``O, v1, v2`` with ``v1, v2`` in ``[-B, B]^2``
and ``cross(v1, v2) > 0``, which picks one of the two labelings of every
unordered pair.  The outer ``x1`` loop is split into independent chunks;
each chunk is a set of numpy arrays so the scans in :mod:`analysis` can
classify it in one vectorized call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from .centers import Triangle

__all__ = [
    "EnumSpec",
    "SYMMETRIES",
    "Chunk",
    "chunk_keys",
    "make_chunk",
    "iter_chunks",
    "enumerate_triangles",
    "orbit",
    "canonical_form",
    "is_box_representative",
]

# the 8 symmetries of Z^2 fixing the origin
SYMMETRIES = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (x, -y),
    lambda x, y: (-y, -x),
)

Chunk = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


@dataclass(frozen=True)
class EnumSpec:
    bound: int
    primitive_only: bool = False
    dedupe: bool = False

    def __post_init__(self):
        if int(self.bound) < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")


def _base_pairs(x1, y1, x2, y2):
    """The six (side, side) pairs obtained by moving each vertex to the origin."""
    return (
        (x1, y1, x2, y2),
        (x2, y2, x1, y1),
        (-x1, -y1, x2 - x1, y2 - y1),
        (x2 - x1, y2 - y1, -x1, -y1),
        (-x2, -y2, x1 - x2, y1 - y2),
        (x1 - x2, y1 - y2, -x2, -y2),
    )


def _candidates(x1, y1, x2, y2):
    for a1, b1, a2, b2 in _base_pairs(x1, y1, x2, y2):
        for sym in SYMMETRIES:
            yield (*sym(a1, b1), *sym(a2, b2))


def orbit(t: Triangle) -> List[Tuple[int, int, int, int]]:
    """All positively oriented origin-based coordinate tuples congruent to ``t``
    under translation, vertex relabeling and the 8 lattice symmetries."""
    out = set()
    for c in _candidates(*t.side_vectors()):
        if c[0] * c[3] - c[1] * c[2] > 0:
            out.add(c)
    return sorted(out)


def canonical_form(t: Triangle) -> Triangle:
    return Triangle.from_origin(*orbit(t)[0])


def _lex_less(a, b):
    """Elementwise lexicographic ``a < b`` for tuples of equal-shape arrays."""
    less = np.zeros(a[0].shape, dtype=bool)
    equal = np.ones(a[0].shape, dtype=bool)
    for u, v in zip(a, b):
        less |= equal & (u < v)
        equal &= u == v
    return less


def is_box_representative(x1, y1, x2, y2, bound: int) -> np.ndarray:
    """True where the triangle is the lexicographically smallest member of its
    orbit among the positively oriented members that fit in ``[-bound, bound]``.

    Exactly one enumerated triangle per orbit passes, and the test only looks
    at the triangle itself, so chunks can be filtered independently.
    """
    own = (x1, y1, x2, y2)
    keep = np.ones(np.shape(x1), dtype=bool)
    for c in _candidates(x1, y1, x2, y2):
        ok = c[0] * c[3] - c[1] * c[2] > 0
        for v in c:
            ok &= np.abs(v) <= bound
        keep &= ~(ok & _lex_less(c, own))
    return keep


def chunk_keys(bound: int) -> List[int]:
    """The chunk identifiers (one per ``x1`` value), in enumeration order."""
    return list(range(-bound, bound + 1))


def make_chunk(spec: EnumSpec, x1_value: int) -> Chunk:
    """All triangles of the box with ``x1 == x1_value``.

    Order inside the chunk: ``y1`` ascending, then ``(x2, y2)`` lexicographic.
    """
    b = spec.bound
    axis = np.arange(-b, b + 1, dtype=np.int64)
    px, py = (v.ravel() for v in np.meshgrid(axis, axis, indexing="ij"))
    y1 = np.repeat(axis, px.size)
    x2 = np.tile(px, axis.size)
    y2 = np.tile(py, axis.size)
    x1 = np.full(y1.shape, x1_value, dtype=np.int64)
    keep = x1 * y2 - y1 * x2 > 0
    x1, y1, x2, y2 = x1[keep], y1[keep], x2[keep], y2[keep]
    if spec.primitive_only:
        gcd = np.gcd(np.gcd(x1, y1), np.gcd(x2, y2))
        keep = gcd == 1
        x1, y1, x2, y2 = x1[keep], y1[keep], x2[keep], y2[keep]
    if spec.dedupe:
        keep = is_box_representative(x1, y1, x2, y2, b)
        x1, y1, x2, y2 = x1[keep], y1[keep], x2[keep], y2[keep]
    return x1, y1, x2, y2


def iter_chunks(spec: EnumSpec) -> Iterator[Chunk]:
    for key in chunk_keys(spec.bound):
        yield make_chunk(spec, key)


def enumerate_triangles(spec: EnumSpec) -> Iterator[Triangle]:
    """Stream every triangle of the box exactly once.

    With ``dedupe`` the canonical form of each orbit is yielded on first
    encounter; it may lie outside the box.
    """
    raw = EnumSpec(spec.bound, spec.primitive_only, dedupe=False)
    seen = set()
    for chunk in iter_chunks(raw):
        for x1, y1, x2, y2 in zip(*(c.tolist() for c in chunk)):
            t = Triangle.from_origin(x1, y1, x2, y2)
            if spec.dedupe:
                rep = canonical_form(t)
                if rep in seen:
                    continue
                seen.add(rep)
                t = rep
            yield t
