"""Exact centers, integrality conditions and exhaustive searches for lattice triangles."""

from .centers import (
    DegenerateTriangleError,
    EulerLineUndefinedError,
    LatticePoint,
    RationalLine,
    RationalPoint,
    Triangle,
    area_twice,
    centroid,
    circumcenter,
    circumradius_squared,
    euler_line,
    euler_line_lattice_point,
    orthocenter,
)
from .conditions import ConditionVector, classify, primitive_gcd

__version__ = "0.1.0"
