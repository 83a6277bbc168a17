"""Regular m-gon inscribed in the unit circle, with side A1A2 horizontal at the bottom"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..core.errors import GeometryError, InvalidProblemError

logger = logging.getLogger(__name__)

GEOMETRY_TOL = 1e-12


@dataclass(frozen=True)
class PolygonSpec:
    m: int

    def __post_init__(self):
        if self.m < 3:
            raise InvalidProblemError(f"A polygon needs m >= 3 sides, got {self.m}")

    @property
    def half_angle(self) -> float:
        return math.pi / self.m

    @property
    def central_angle(self) -> float:
        return 2 * math.pi / self.m

    @property
    def side_length(self) -> float:
        return 2 * math.sin(math.pi / self.m)

    @property
    def perimeter(self) -> float:
        return self.m * self.side_length

    @property
    def density(self) -> float:
        """Value of the uniform pdf on the boundary."""
        return 1 / self.perimeter


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"Non-finite point ({self.x}, {self.y})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])

    def distance(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    @classmethod
    def from_array(cls, xy) -> "Point2":
        return cls(float(xy[0]), float(xy[1]))


@dataclass(frozen=True)
class AffineMap2:
    """(x, y) -> (a x + b y, c x + d y); must be an isometry."""
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        col1 = self.a ** 2 + self.c ** 2
        col2 = self.b ** 2 + self.d ** 2
        dot = self.a * self.b + self.c * self.d
        deviation = max(abs(det - 1), abs(col1 - 1), abs(col2 - 1), abs(dot))
        if deviation > GEOMETRY_TOL:
            raise GeometryError(f"Map is not an isometry (deviation {deviation:.3e})", deviation)

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def apply(self, point: Point2) -> Point2:
        return Point2(self.a * point.x + self.b * point.y, self.c * point.x + self.d * point.y)

    def apply_array(self, xy: np.ndarray) -> np.ndarray:
        """Apply to an (N, 2) array of points."""
        return xy @ self.matrix.T

    def power(self, j: int) -> np.ndarray:
        """Matrix of the j-fold composition (identity for j = 0)."""
        return np.linalg.matrix_power(self.matrix, j)


def vertices(spec: PolygonSpec) -> list[Point2]:
    """A_j at polar angle 3pi/2 - pi/m + (j-1) 2pi/m, j = 1..m."""
    theta1 = 1.5 * math.pi - spec.half_angle
    return [
        Point2(math.cos(theta1 + j * spec.central_angle), math.sin(theta1 + j * spec.central_angle))
        for j in range(spec.m)
    ]


def rotation_map(spec: PolygonSpec) -> AffineMap2:
    """The map T carrying side A_i A_{i+1} onto A_{i+1} A_{i+2}.

    Built from the trigonometric coefficient expressions and checked against
    the plain rotation by 2pi/m.
    """
    t = spec.half_angle
    sin3, cos3 = math.sin(3 * t), math.cos(3 * t)
    csc, sec = 1 / math.sin(t), 1 / math.cos(t)
    a = 0.5 * (sin3 * csc - 1)
    b = 0.5 * (-sin3 * sec - math.tan(t))
    c = 0.5 * (1 / math.tan(t) - cos3 * csc)
    d = 0.5 * (cos3 * sec + 1)

    theta = spec.central_angle
    expected = (math.cos(theta), -math.sin(theta), math.sin(theta), math.cos(theta))
    deviation = max(abs(u - v) for u, v in zip((a, b, c, d), expected))
    if deviation > GEOMETRY_TOL:
        raise GeometryError(
            f"Coefficient map for m={spec.m} differs from rotation by 2pi/m ({deviation:.3e})",
            deviation,
        )
    return AffineMap2(a, b, c, d)
