"""Lloyd iteration with frozen conditional points.

Free points move to the midpoint of their Voronoi cell (the centroid for a
uniform density); conditional points never move.
"""

import asyncio
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.errors import InvalidProblemError
from ..core.partition import partition
from ..core.types import Allocation, SegmentProblem, SubIntervalKind
from .exact import float_distortion

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000


@dataclass
class LloydResult:
    points: list[float]
    error: float
    iterations: int
    converged: bool
    seed: int


def _free_counts(problem: SegmentProblem, allocation: Allocation) -> list[tuple[float, float, int]]:
    subs = partition(problem)
    allocation.validate(subs)
    layout = []
    for sub, count in zip(subs, allocation.counts):
        fixed = 2 if sub.kind is SubIntervalKind.BOTH_FIXED else 1
        layout.append((float(sub.lo), float(sub.hi), count - fixed))
    return layout


def lloyd_conditional(
    problem: SegmentProblem,
    allocation: Allocation,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    init: Sequence[float] | None = None,
) -> LloydResult:
    """Run conditional Lloyd from a random (or given) start.

    Free points start uniformly at random inside their subinterval. Stops when
    the largest move drops below `tol`; hitting `max_iter` is reported through
    `converged=False`, not raised.
    """
    if tol <= 0:
        raise InvalidProblemError(f"Tolerance must be positive, got {tol}")
    a, b = float(problem.a), float(problem.b)
    beta = np.array([float(p) for p in problem.beta])

    if init is None:
        rng = np.random.default_rng(seed)
        free = [rng.uniform(lo, hi, size=k) for lo, hi, k in _free_counts(problem, allocation)]
        points = np.concatenate([beta, *free])
    else:
        points = np.asarray(init, dtype=float)
    order = np.argsort(points, kind="stable")
    points = points[order]
    fixed = np.isin(points, beta)

    iterations = 0
    converged = False
    while iterations < max_iter:
        mids = (points[:-1] + points[1:]) / 2
        left = np.concatenate([[a], mids])
        right = np.concatenate([mids, [b]])
        moved = np.where(fixed, points, (left + right) / 2)
        step = float(np.max(np.abs(moved - points))) if len(points) else 0.0
        points = moved
        iterations += 1
        if step < tol:
            converged = True
            break

    if not converged:
        logger.warning(f"Lloyd seed={seed} did not converge within {max_iter} iterations")
    error = float_distortion(a, b, points)
    logger.debug(f"Lloyd seed={seed}: {iterations} iterations, error={error:.12g}")
    return LloydResult(
        points=points.tolist(),
        error=error,
        iterations=iterations,
        converged=converged,
        seed=seed,
    )


async def _run_seeds(
    problem: SegmentProblem,
    allocation: Allocation,
    seeds: Sequence[int],
    tol: float,
    max_iter: int,
    threads: int,
) -> list[LloydResult]:
    semaphore = asyncio.Semaphore(max(1, threads))

    async def run_one(seed: int) -> LloydResult:
        async with semaphore:
            return await asyncio.to_thread(
                lloyd_conditional, problem, allocation, seed, tol, max_iter
            )

    return await asyncio.gather(*[run_one(s) for s in seeds])


def lloyd_multi_seed(
    problem: SegmentProblem,
    allocation: Allocation,
    seeds: int | Sequence[int] = 20,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    threads: int = 1,
) -> tuple[LloydResult, list[LloydResult]]:
    """Run several seeds; return the best run (lowest error, then lowest seed) and all runs."""
    seed_list = list(range(seeds)) if isinstance(seeds, int) else list(seeds)
    if not seed_list:
        raise InvalidProblemError("At least one seed is required")
    logger.info(f"Running conditional Lloyd for {len(seed_list)} seeds")
    results = asyncio.run(_run_seeds(problem, allocation, seed_list, tol, max_iter, threads))
    best = min(results, key=lambda r: (r.error, r.seed))
    return best, results
