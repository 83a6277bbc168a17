"""Conditional quantizers on the boundary of a regular polygon, vertices as the conditional set"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from ..core.errors import AllocationInfeasibleError, GeometryError, SearchBudgetError
from .geometry import GEOMETRY_TOL, Point2, PolygonSpec, rotation_map, vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolygonQuantizer:
    m: int
    n: int
    side_counts: tuple[int, ...]
    points: tuple[Point2, ...]
    error: float

    def points_array(self) -> np.ndarray:
        return np.array([[p.x, p.y] for p in self.points])


def _check_side_count(n1: int) -> None:
    if n1 < 2:
        raise AllocationInfeasibleError(n1, 2, f"A side holds both its vertices, so n1 >= 2 (got {n1})")


def _base_side_array(spec: PolygonSpec, n1: int) -> np.ndarray:
    s = math.sin(spec.half_angle)
    xs = -s + 2 * s * np.arange(n1) / (n1 - 1)
    return np.column_stack([xs, np.full(n1, -math.cos(spec.half_angle))])


def base_side_points(spec: PolygonSpec, n1: int) -> list[Point2]:
    """n1 equally spaced points on A1A2, both vertices included."""
    _check_side_count(n1)
    return [Point2.from_array(xy) for xy in _base_side_array(spec, n1)]


def side_error(spec: PolygonSpec, n1: int) -> float:
    """Distortion of one side carrying n1 points: sin^2(pi/m) / (3 m (n1-1)^2)."""
    _check_side_count(n1)
    return math.sin(spec.half_angle) ** 2 / (3 * spec.m * (n1 - 1) ** 2)


def side_counts(spec: PolygonSpec, n: int) -> tuple[int, ...]:
    """Balanced counts: with n = mk + l, the l lowest-index sides get k+2, the rest k+1."""
    if n < spec.m:
        raise AllocationInfeasibleError(n, spec.m)
    k, l = divmod(n, spec.m)
    return tuple(k + 2 if i < l else k + 1 for i in range(spec.m))


def boundary_distance(spec: PolygonSpec, xy: np.ndarray) -> np.ndarray:
    """Euclidean distance from each row of xy to the nearest polygon side."""
    verts = np.array([[p.x, p.y] for p in vertices(spec)])
    starts, ends = verts, np.roll(verts, -1, axis=0)
    seg = ends - starts                                     # (m, 2)
    rel = xy[:, None, :] - starts[None, :, :]               # (N, m, 2)
    t = np.clip((rel * seg).sum(axis=2) / (seg * seg).sum(axis=1), 0.0, 1.0)
    nearest = starts[None, :, :] + t[:, :, None] * seg[None, :, :]
    return np.linalg.norm(xy[:, None, :] - nearest, axis=2).min(axis=1)


def polygon_quantizer(spec: PolygonSpec, n: int) -> PolygonQuantizer:
    """Place points side by side: base-side layout for n_i, carried over by T^(i-1).

    Each side contributes its points except the far vertex, which is the first
    point of the next side, so vertices appear once.
    """
    counts = side_counts(spec, n)
    rot = rotation_map(spec)

    chunks = []
    for i, count in enumerate(counts):
        base = _base_side_array(spec, count)
        chunks.append((base @ rot.power(i).T)[:-1])
    xy = np.vstack(chunks)

    off = float(boundary_distance(spec, xy).max())
    if off > GEOMETRY_TOL:
        raise GeometryError(f"Quantizer point off the boundary by {off:.3e}", off)

    error = sum(side_error(spec, c) for c in counts)
    logger.debug(f"Polygon m={spec.m} n={n} counts={counts} error={error}")
    return PolygonQuantizer(
        m=spec.m,
        n=n,
        side_counts=counts,
        points=tuple(Point2.from_array(row) for row in xy),
        error=error,
    )


def polygon_error_mk(spec: PolygonSpec, k: int) -> float:
    """Error at n = mk: sin^2(pi/m) / (3 k^2)."""
    if k < 1:
        raise AllocationInfeasibleError(spec.m * k, spec.m)
    return math.sin(spec.half_angle) ** 2 / (3 * k ** 2)


def polygon_coefficient(spec: PolygonSpec) -> float:
    """lim n^2 V_n = (1/3) m^2 sin^2(pi/m)."""
    return spec.m ** 2 * math.sin(spec.half_angle) ** 2 / 3


def exhaustive_side_counts(spec: PolygonSpec, n: int, cap: int = 1_000_000) -> tuple[int, ...]:
    """Lexicographically smallest side-count vector minimising the total error.

    The objective is compared exactly as sum 1/(n_i - 1)^2, the common factor dropped.
    """
    if n < spec.m:
        raise AllocationInfeasibleError(n, spec.m)
    extra = n - spec.m
    candidates = comb(extra + spec.m - 1, spec.m - 1)
    if candidates > cap:
        raise SearchBudgetError(candidates, cap)

    best: tuple[Fraction, tuple[int, ...]] | None = None
    counts = [2] * spec.m

    def visit(i: int, remaining: int, partial: Fraction) -> None:
        nonlocal best
        if i == spec.m - 1:
            counts[i] = 2 + remaining
            value = partial + Fraction(1, (counts[i] - 1) ** 2)
            if best is None or value < best[0]:
                best = (value, tuple(counts))
            return
        for e in range(remaining + 1):
            counts[i] = 2 + e
            visit(i + 1, remaining - e, partial + Fraction(1, (1 + e) ** 2))

    visit(0, extra, Fraction(0))
    return best[1]
