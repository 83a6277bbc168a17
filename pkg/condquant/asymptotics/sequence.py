"""Error sequences, dimension estimates and coefficient convergence.

V_inf is 0 for every supported case (absolutely continuous measures), so the
scaled columns use V_n directly.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from ..allocation.closed_form import quarter_half_bracket
from ..allocation.solver import iter_greedy, minimal_n
from ..core.errors import AllocationInfeasibleError
from ..core.partition import partition
from ..core.types import SegmentProblem
from ..polygon.geometry import PolygonSpec
from ..polygon.quantizer import polygon_error_mk, side_counts, side_error

logger = logging.getLogger(__name__)

V_INFINITY = 0.0


@dataclass(frozen=True)
class ErrorSequencePoint:
    n: int
    counts: tuple[int, ...]
    error_exact: Fraction | None
    error_float: float
    n2_scaled: float
    dim_estimate: float


def dimension_estimate(n: int, error: float) -> float:
    """2 log n / -log(V_n - V_inf); nan where the ratio is undefined."""
    gap = error - V_INFINITY
    if gap <= 0 or gap >= 1:
        return math.nan
    return 2 * math.log(n) / -math.log(gap)


def dimension_slope(n1: int, v1: float, n2: int, v2: float) -> float:
    """Log-log slope estimate 2 log(n2/n1) / -log(V_n2 / V_n1).

    The constant factor in V_n ~ c n^(-2/D) cancels, so this approaches D
    much faster than dimension_estimate.
    """
    if n1 == n2 or v1 <= 0 or v2 <= 0 or v1 == v2:
        return math.nan
    return 2 * math.log(n2 / n1) / -math.log(v2 / v1)


def _point(n: int, counts: tuple[int, ...], exact: Fraction | None, error: float) -> ErrorSequencePoint:
    return ErrorSequencePoint(
        n=n,
        counts=counts,
        error_exact=exact,
        error_float=error,
        n2_scaled=n * n * (error - V_INFINITY),
        dim_estimate=dimension_estimate(n, error),
    )


def error_sequence_segment(
    problem: SegmentProblem,
    n_max: int,
    n_min: int | None = None,
) -> list[ErrorSequencePoint]:
    """Exact V_n for every feasible n in [n_min, n_max], via the nested greedy allocation."""
    subs = partition(problem)
    lowest = minimal_n(subs)
    if n_max < lowest:
        raise AllocationInfeasibleError(n_max, lowest)
    start = lowest if n_min is None else max(n_min, lowest)

    seq = []
    for n, allocation, error in iter_greedy(subs):
        if n > n_max:
            break
        if n >= start:
            seq.append(_point(n, allocation.counts, error, float(error)))
    logger.info(f"Segment error sequence: {len(seq)} rows, n={start}..{n_max}")
    return seq


def error_sequence_polygon(
    spec: PolygonSpec,
    n_max: int,
    n_min: int | None = None,
) -> list[ErrorSequencePoint]:
    """V_n on the m-gon boundary for n in [n_min, n_max], balanced side counts."""
    if n_max < spec.m:
        raise AllocationInfeasibleError(n_max, spec.m)
    start = spec.m if n_min is None else max(n_min, spec.m)
    seq = []
    for n in range(start, n_max + 1):
        counts = side_counts(spec, n)
        error = sum(side_error(spec, c) for c in counts)
        seq.append(_point(n, counts, None, error))
    logger.info(f"Polygon error sequence m={spec.m}: {len(seq)} rows")
    return seq


def is_nonincreasing(seq: list[ErrorSequencePoint]) -> bool:
    values = [p.error_exact if p.error_exact is not None else p.error_float for p in seq]
    return all(b <= a for a, b in zip(values, values[1:]))


def quarter_half_squeeze_holds(n: int, error: Fraction) -> bool:
    """V_{x+2,x+3,2x+3} <= V_n <= V_{x+1,x+2,2x+1} for 4x+2 <= n <= 4x+6."""
    lower, upper = quarter_half_bracket(n)
    return lower <= error <= upper


def polygon_squeeze_holds(spec: PolygonSpec, n: int, error: float) -> bool:
    """(mq)^2 V_{m(q+1)} <= n^2 V_n <= (m(q+1))^2 V_{mq} for mq <= n < m(q+1)."""
    q = n // spec.m
    scaled = n * n * error
    lower = (spec.m * q) ** 2 * polygon_error_mk(spec, q + 1)
    upper = (spec.m * (q + 1)) ** 2 * polygon_error_mk(spec, q)
    return lower <= scaled <= upper
