"""Brute-force search over free-point positions, followed by local refinement"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.optimize import minimize

from ..core.errors import AllocationInfeasibleError, InvalidProblemError
from ..core.types import SegmentProblem
from .exact import distortion_batch, float_distortion

logger = logging.getLogger(__name__)

MAX_FREE_POINTS = 3


@dataclass
class GridResult:
    points: list[float]
    error: float
    grid_step: float
    candidates: int


def _grid_step(length: float, free: int, step: float, max_candidates: int) -> float:
    """Requested step, coarsened until the candidate count fits the budget."""
    size = int(length / step) + 1
    if math.comb(size, free) <= max_candidates:
        return step
    size = int((max_candidates * math.factorial(free)) ** (1 / free))
    while size > free and math.comb(size, free) > max_candidates:
        size -= 1
    return length / (size - 1)


def _index_blocks(size: int, free: int) -> Iterator[np.ndarray]:
    """Strictly increasing index tuples of length free (<= 3), one block per first index."""
    if free == 1:
        yield np.arange(size)[:, None]
        return
    for i in range(size - free + 1):
        if free == 2:
            tail = np.arange(i + 1, size)[:, None]
        else:
            r, c = np.triu_indices(size - i - 1, k=1)
            tail = np.column_stack([r, c]) + i + 1
        yield np.column_stack([np.full(len(tail), i), tail])


def grid_search(
    problem: SegmentProblem,
    n: int,
    step: float = 1e-4,
    refine_tol: float = 1e-8,
    max_candidates: int = 2_000_000,
    keep: int = 5,
) -> GridResult:
    """Best n-point conditional set found by grid search plus Nelder-Mead refinement.

    Free points range over all of [a, b], so this makes no use of the
    subinterval structure.
    """
    free = n - problem.min_n
    if free < 0:
        raise AllocationInfeasibleError(n, problem.min_n)
    if free > MAX_FREE_POINTS:
        raise InvalidProblemError(f"Grid search supports at most {MAX_FREE_POINTS} free points, got {free}")

    a, b = float(problem.a), float(problem.b)
    beta = np.array([float(p) for p in problem.beta])
    if free == 0:
        return GridResult(points=beta.tolist(), error=float_distortion(a, b, beta), grid_step=0.0, candidates=1)

    grid_step = _grid_step(b - a, free, step, max_candidates)
    if grid_step > step:
        logger.warning(f"Grid step coarsened from {step:g} to {grid_step:.3g} for {free} free points")
    grid = np.linspace(a, b, int(round((b - a) / grid_step)) + 1)

    best_rows: list[tuple[float, np.ndarray]] = []
    total = 0
    for block in _index_blocks(len(grid), free):
        cand = grid[block]
        full = np.sort(np.hstack([cand, np.broadcast_to(beta, (len(cand), len(beta)))]), axis=1)
        errors = distortion_batch(a, b, full)
        total += len(cand)
        top = np.argsort(errors, kind="stable")[:keep]
        best_rows.extend((float(errors[j]), cand[j].copy()) for j in top)
        best_rows.sort(key=lambda item: item[0])
        del best_rows[keep:]
    logger.info(f"Grid search evaluated {total} candidates at step {grid_step:.3g}")

    def objective(x: np.ndarray) -> float:
        return float_distortion(a, b, np.concatenate([np.clip(x, a, b), beta]))

    best_error, best_free = best_rows[0]
    for _, start in best_rows:
        res = minimize(
            objective,
            start,
            method="Nelder-Mead",
            options={"xatol": refine_tol, "fatol": 1e-16, "maxiter": 20_000},
        )
        if res.fun < best_error:
            best_error, best_free = float(res.fun), np.clip(res.x, a, b)

    points = np.sort(np.concatenate([best_free, beta]))
    return GridResult(points=points.tolist(), error=best_error, grid_step=grid_step, candidates=total)
