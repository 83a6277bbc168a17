"""Split a segment problem into subintervals between conditional points"""

from fractions import Fraction

from .errors import InvalidProblemError
from .types import SegmentProblem, SubInterval, SubIntervalKind


def partition(problem: SegmentProblem) -> list[SubInterval]:
    """Tile [a, b] with breakpoints beta ∪ {a, b}, left to right.

    A subinterval touching a non-conditional support end is LeftFree/RightFree;
    every other subinterval has both endpoints conditional.
    """
    conditional = set(problem.beta)
    breaks = sorted(conditional | {problem.a, problem.b})

    subs: list[SubInterval] = []
    for index, (lo, hi) in enumerate(zip(breaks, breaks[1:]), start=1):
        if lo == problem.a and lo not in conditional:
            kind = SubIntervalKind.LEFT_FREE
        elif hi == problem.b and hi not in conditional:
            kind = SubIntervalKind.RIGHT_FREE
        else:
            kind = SubIntervalKind.BOTH_FIXED
        subs.append(SubInterval(lo=lo, hi=hi, kind=kind, index=index))
    return subs


def uniform_grid_problem(k: int) -> SegmentProblem:
    """[0, 1] with beta = {1/k, 2/k, ..., 1}"""
    if k < 1:
        raise InvalidProblemError(f"Grid size must be >= 1, got {k}")
    return SegmentProblem(
        a=Fraction(0),
        b=Fraction(1),
        beta=tuple(Fraction(j, k) for j in range(1, k + 1)),
    )


def quarter_half_problem() -> SegmentProblem:
    """[0, 1] with beta = {1/4, 1/2}"""
    return SegmentProblem(a=Fraction(0), b=Fraction(1), beta=(Fraction(1, 4), Fraction(1, 2)))
