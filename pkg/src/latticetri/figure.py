"""Deterministic SVG drawings of a lattice triangle and its Euler line.

All geometry is exact up to the moment coordinates are written out; the only
floats are the fixed 6-decimal numbers in the SVG text, plus the circumradius,
which is a square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from .centers import (
    EulerLineUndefinedError,
    RationalLine,
    Triangle,
    centroid,
    circumcenter,
    circumradius_squared,
    euler_line,
    orthocenter,
)

__all__ = ["FigureSpec", "PRESETS", "SHOW_ALL", "render_svg", "num"]

SHOW_ALL = frozenset({"circumcircle", "euler_line", "centers", "grid", "labels"})

PRESETS = {
    "fig1": Triangle.from_origin(2, 0, 2, 3),
    "fig2": Triangle.from_origin(12, 0, 12, 18),
    "fig3": Triangle.from_origin(4, 2, 1, 5),
    "fig4": Triangle.from_origin(6, 0, 8, 4),
}


@dataclass(frozen=True)
class FigureSpec:
    triangle: Triangle
    show: FrozenSet[str] = field(default=SHOW_ALL)
    width: int = 480
    height: int = 480

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas size must be positive")
        unknown = set(self.show) - SHOW_ALL
        if unknown:
            raise ValueError(f"unknown figure elements: {sorted(unknown)}")


def num(v) -> str:
    s = f"{float(v):.6f}"
    return "0.000000" if s == "-0.000000" else s


def _clip_line(line: RationalLine, box) -> Optional[Tuple[Tuple[Fraction, Fraction], ...]]:
    """Exact endpoints of ``line`` inside ``[x0, x1] x [y0, y1]``."""
    x0, y0, x1, y1 = box
    a, b, c = line.a, line.b, line.c
    pts = set()
    if b:
        for x in (x0, x1):
            y = Fraction(c - a * x, b)
            if y0 <= y <= y1:
                pts.add((Fraction(x), y))
    if a:
        for y in (y0, y1):
            x = Fraction(c - b * y, a)
            if x0 <= x <= x1:
                pts.add((x, Fraction(y)))
    if len(pts) < 2:
        return None
    pts = sorted(pts)
    return pts[0], pts[-1]


def _world_box(t: Triangle, points) -> Tuple[int, int, int, int]:
    xs = [p[0] for p in t.vertices()] + [p[0] for p in points]
    ys = [p[1] for p in t.vertices()] + [p[1] for p in points]
    return (math.floor(min(xs)) - 1, math.floor(min(ys)) - 1,
            math.ceil(max(xs)) + 1, math.ceil(max(ys)) + 1)


def render_svg(spec: FigureSpec) -> str:
    t = spec.triangle
    f, g, h = circumcenter(t), centroid(t), orthocenter(t)
    x0, y0, x1, y1 = _world_box(t, (f, g, h))
    margin = 20
    scale = min((spec.width - 2 * margin) / (x1 - x0), (spec.height - 2 * margin) / (y1 - y0))

    def cx(x) -> str:
        return num(margin + (Fraction(x) - x0) * Fraction(scale))

    def cy(y) -> str:
        return num(spec.height - margin - (Fraction(y) - y0) * Fraction(scale))

    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]
    if "grid" in spec.show:
        out.append('<g id="grid" stroke="#999999" stroke-width="0.6" stroke-dasharray="1,3">')
        for x in range(x0, x1 + 1):
            out.append(f'<line x1="{cx(x)}" y1="{cy(y0)}" x2="{cx(x)}" y2="{cy(y1)}"/>')
        for y in range(y0, y1 + 1):
            out.append(f'<line x1="{cx(x0)}" y1="{cy(y)}" x2="{cx(x1)}" y2="{cy(y)}"/>')
        out.append("</g>")
        out.append('<g id="axes" stroke="black" stroke-width="1">')
        if x0 <= 0 <= x1:
            out.append(f'<line x1="{cx(0)}" y1="{cy(y0)}" x2="{cx(0)}" y2="{cy(y1)}"/>')
        if y0 <= 0 <= y1:
            out.append(f'<line x1="{cx(x0)}" y1="{cy(0)}" x2="{cx(x1)}" y2="{cy(0)}"/>')
        out.append("</g>")
    pts = " ".join(f"{cx(p.x)},{cy(p.y)}" for p in t.vertices())
    out.append(f'<polygon id="triangle" points="{pts}" fill="#ccd9f5" stroke="#1f3fbf" stroke-width="1.2"/>')
    if "circumcircle" in spec.show:
        radius = math.sqrt(circumradius_squared(t)) * scale
        out.append(f'<circle id="circumcircle" cx="{cx(f.x)}" cy="{cy(f.y)}" r="{num(radius)}" '
                   f'data-center="{num(f.x)},{num(f.y)}" fill="none" stroke="black" stroke-width="1"/>')
    if "euler_line" in spec.show:
        try:
            line = euler_line(t)
        except EulerLineUndefinedError:
            line = None
        seg = _clip_line(line, (x0, y0, x1, y1)) if line is not None else None
        if seg is not None:
            (ax, ay), (bx, by) = seg
            out.append(f'<line id="euler-line" x1="{cx(ax)}" y1="{cy(ay)}" x2="{cx(bx)}" y2="{cy(by)}" '
                       f'data-equation="{line.a} {line.b} {line.c}" stroke="#1f3fbf" stroke-width="2"/>')
    if "centers" in spec.show:
        for name, p in (("F", f), ("G", g), ("H", h)):
            out.append(f'<circle id="center-{name}" cx="{cx(p.x)}" cy="{cy(p.y)}" r="3" '
                       f'data-point="{num(p.x)},{num(p.y)}" fill="black"/>')
    for i, p in enumerate(t.vertices(), 1):
        out.append(f'<circle id="vertex-{i}" cx="{cx(p.x)}" cy="{cy(p.y)}" r="3" fill="black"/>')
    if "labels" in spec.show:
        out.append('<g font-family="sans-serif" font-size="12">')
        labels = [(f"v{i}", p) for i, p in enumerate(t.vertices(), 1)]
        if "centers" in spec.show:
            labels += [("F", f), ("G", g), ("H", h)]
        for text, p in labels:
            x = Fraction(cx(p[0])) + 5
            y = Fraction(cy(p[1])) - 5
            out.append(f'<text x="{num(x)}" y="{num(y)}">{text}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
