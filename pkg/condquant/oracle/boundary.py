"""Riemann-sum distortion on the polygon boundary"""

import logging
from typing import Sequence

import numpy as np

from ..core.errors import InvalidProblemError
from ..polygon.geometry import Point2, PolygonSpec, vertices

logger = logging.getLogger(__name__)

MIN_SAMPLES = 10_000


def boundary_samples(spec: PolygonSpec, start: int, stop: int, samples: int) -> np.ndarray:
    """Arc-length midpoints with indices start..stop-1 out of `samples` along A1 A2 ... Am A1."""
    verts = np.array([[p.x, p.y] for p in vertices(spec)])
    arc = (np.arange(start, stop) + 0.5) / samples * spec.m
    side = np.minimum(arc.astype(int), spec.m - 1)
    frac = arc - side
    begin = verts[side]
    end = verts[(side + 1) % spec.m]
    return begin + frac[:, None] * (end - begin)


def boundary_discretization_error(
    spec: PolygonSpec,
    points: Sequence[Point2] | np.ndarray,
    samples: int = 1_000_000,
    chunk: int = 65_536,
) -> float:
    """Mean squared distance to the nearest point under the uniform boundary measure.

    Midpoint rule in arc length; the sample mean already carries the 1/(m l) density.
    """
    if samples < MIN_SAMPLES:
        raise InvalidProblemError(f"Need at least {MIN_SAMPLES} samples, got {samples}")
    if isinstance(points, np.ndarray):
        sites = np.asarray(points, dtype=float).reshape(-1, 2)
    else:
        sites = np.array([[p.x, p.y] for p in points], dtype=float)
    if len(sites) == 0:
        raise InvalidProblemError("Point set is empty")

    total = 0.0
    for start in range(0, samples, chunk):
        xy = boundary_samples(spec, start, min(start + chunk, samples), samples)
        d2 = ((xy[:, None, :] - sites[None, :, :]) ** 2).sum(axis=2)
        total += float(d2.min(axis=1).sum())
    value = total / samples
    logger.debug(f"Boundary distortion m={spec.m} sites={len(sites)} samples={samples}: {value:.10g}")
    return value
