"""Cellwise distortion integrals for the uniform measure on [a, b]"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..core.errors import ConditionalViolationError, InvalidProblemError
from ..core.types import SegmentProblem


@dataclass(frozen=True)
class VoronoiCell1D:
    left: Fraction
    right: Fraction
    site: Fraction

    def __post_init__(self):
        if not self.left <= self.site <= self.right:
            raise InvalidProblemError(
                f"Site {self.site} outside its cell [{self.left}, {self.right}]"
            )

    def distortion_integral(self) -> Fraction:
        """Integral of (x - site)^2 over the cell (unnormalised)."""
        return ((self.right - self.site) ** 3 + (self.site - self.left) ** 3) / 3

    @property
    def midpoint(self) -> Fraction:
        return (self.left + self.right) / 2


def voronoi_cells(a: Fraction, b: Fraction, points: Sequence[Fraction]) -> list[VoronoiCell1D]:
    """Cells of sorted distinct sites on [a, b]; boundaries are midpoints."""
    sites = sorted(set(points))
    if not sites:
        raise InvalidProblemError("Voronoi partition needs at least one site")
    bounds = [a] + [(p + q) / 2 for p, q in zip(sites, sites[1:])] + [b]
    return [
        VoronoiCell1D(left=bounds[i], right=bounds[i + 1], site=site)
        for i, site in enumerate(sites)
    ]


def _check_points(problem: SegmentProblem, points: Sequence[Fraction]) -> None:
    if not points:
        raise InvalidProblemError("Point set is empty")
    outside = [p for p in points if p < problem.a or p > problem.b]
    if outside:
        raise InvalidProblemError(
            f"Points outside [{problem.a}, {problem.b}]: {[str(p) for p in outside]}"
        )
    present = set(points)
    missing = [p for p in problem.beta if p not in present]
    if missing:
        raise ConditionalViolationError(missing)


def exact_distortion(problem: SegmentProblem, points: Sequence[Fraction]) -> Fraction:
    """Expected squared distance to the nearest point, as an exact rational."""
    points = [Fraction(p) for p in points]
    _check_points(problem, points)
    cells = voronoi_cells(problem.a, problem.b, points)
    total = sum((cell.distortion_integral() for cell in cells), Fraction(0))
    return total / problem.length


def distortion_batch(a: float, b: float, points: np.ndarray) -> np.ndarray:
    """Float distortion for each row of a (K, n) array of sorted points in [a, b]."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    mids = (pts[:, :-1] + pts[:, 1:]) / 2
    k = pts.shape[0]
    left = np.hstack([np.full((k, 1), a), mids])
    right = np.hstack([mids, np.full((k, 1), b)])
    return ((right - pts) ** 3 + (pts - left) ** 3).sum(axis=1) / (3 * (b - a))


def float_distortion(a: float, b: float, points: Sequence[float]) -> float:
    """Float analogue of exact_distortion for one point set."""
    pts = np.sort(np.asarray(points, dtype=float))
    return float(distortion_batch(a, b, pts[None, :])[0])
