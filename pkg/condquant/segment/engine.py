"""Closed-form placement and distortion per subinterval, and quantizer assembly"""

import logging
from fractions import Fraction

from ..core.errors import AllocationInfeasibleError, AllocationMismatchError, InvalidProblemError
from ..core.partition import partition
from ..core.types import (
    Allocation,
    QuantizerResult,
    SegmentProblem,
    SubInterval,
    SubIntervalKind,
)

logger = logging.getLogger(__name__)


def _check_count(sub: SubInterval, count: int) -> None:
    if count < sub.min_count:
        raise AllocationInfeasibleError(
            count,
            sub.min_count,
            f"Subinterval {sub.index} ({sub.kind.value}) needs at least "
            f"{sub.min_count} points, got {count}",
        )


def place_points(sub: SubInterval, count: int) -> list[Fraction]:
    """Optimal positions of `count` points on `sub`, fixed endpoints included.

    LeftFree:  lo + (2j-1)h/(2c-1)
    BothFixed: lo + (j-1)h/(c-1)
    RightFree: lo + 2(j-1)h/(2c-1)
    """
    _check_count(sub, count)
    h = sub.length
    if sub.kind is SubIntervalKind.LEFT_FREE:
        step = h / (2 * count - 1)
        return [sub.lo + (2 * j - 1) * step for j in range(1, count + 1)]
    if sub.kind is SubIntervalKind.RIGHT_FREE:
        step = h / (2 * count - 1)
        return [sub.lo + 2 * (j - 1) * step for j in range(1, count + 1)]
    step = h / (count - 1)
    return [sub.lo + (j - 1) * step for j in range(1, count + 1)]


def sub_error(sub: SubInterval, count: int, support_length: Fraction) -> Fraction:
    """Distortion contributed by `sub` under optimal placement of `count` points."""
    _check_count(sub, count)
    if support_length <= 0:
        raise InvalidProblemError(f"Support length must be positive, got {support_length}")
    cube = sub.length ** 3
    if sub.kind is SubIntervalKind.BOTH_FIXED:
        return cube / (12 * support_length * (count - 1) ** 2)
    return cube / (3 * support_length * (2 * count - 1) ** 2)


def conditional_quantizer(
    problem: SegmentProblem,
    n: int,
    allocation: Allocation,
) -> QuantizerResult:
    """Assemble the quantizer for a given allocation.

    Points shared by adjacent subintervals are counted in both counts but
    appear once in the result.
    """
    if n < problem.min_n:
        raise AllocationInfeasibleError(n, problem.min_n)
    subs = partition(problem)
    allocation.validate(subs, n)

    points: set[Fraction] = set()
    errors: list[Fraction] = []
    for sub, count in zip(subs, allocation.counts):
        points.update(place_points(sub, count))
        errors.append(sub_error(sub, count, problem.length))

    ordered = tuple(sorted(points))
    if len(ordered) != n:
        raise AllocationMismatchError(
            list(allocation.counts),
            f"Allocation yields {len(ordered)} distinct points, expected {n}",
        )
    total = sum(errors, Fraction(0))
    logger.debug(f"Quantizer n={n} counts={allocation} error={total}")
    return QuantizerResult(
        points=ordered,
        error=total,
        allocation=allocation,
        sub_errors=tuple(errors),
    )
