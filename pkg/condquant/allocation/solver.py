"""Integer allocation of points to subintervals.

The total error is separable and each term is convex and strictly
decreasing in its count, so granting points one at a time by largest
exact marginal decrease is optimal. The exhaustive solver enumerates
every composition and exists to cross-check the greedy one.
"""

import heapq
import logging
from fractions import Fraction
from math import comb, lcm
from typing import Iterator

from ..core.errors import AllocationInfeasibleError, SearchBudgetError
from ..core.types import Allocation, SubInterval
from ..segment.engine import sub_error

logger = logging.getLogger(__name__)

EXHAUSTIVE_CAP = 1_000_000


def minimal_counts(subs: list[SubInterval]) -> tuple[int, ...]:
    return tuple(sub.min_count for sub in subs)


def minimal_n(subs: list[SubInterval]) -> int:
    """Smallest feasible n: the minimal counts minus the shared endpoints."""
    return sum(minimal_counts(subs)) - (len(subs) - 1)


def _support_length(subs: list[SubInterval]) -> Fraction:
    return subs[-1].hi - subs[0].lo


def allocation_error(subs: list[SubInterval], allocation: Allocation) -> Fraction:
    """Total distortion of the optimal placement for `allocation`."""
    length = _support_length(subs)
    return sum(
        (sub_error(sub, count, length) for sub, count in zip(subs, allocation.counts)),
        Fraction(0),
    )


def _check_feasible(subs: list[SubInterval], n: int) -> int:
    """Return how many points are left after the minimal allocation."""
    if not subs:
        raise AllocationInfeasibleError(n, 0, "Cannot allocate over an empty partition")
    lowest = minimal_n(subs)
    if n < lowest:
        raise AllocationInfeasibleError(n, lowest)
    return n - lowest


def iter_greedy(subs: list[SubInterval]) -> Iterator[tuple[int, Allocation, Fraction]]:
    """Yield (n, allocation, error) for n = minimal n, minimal n + 1, ... forever.

    Each step grants one point to the subinterval with the largest error
    decrease; ties go to the lowest index. The sequence is nested, so a scan
    over n costs one heap operation per step.
    """
    if not subs:
        raise AllocationInfeasibleError(0, 0, "Cannot allocate over an empty partition")
    length = _support_length(subs)
    counts = list(minimal_counts(subs))
    current = [sub_error(sub, c, length) for sub, c in zip(subs, counts)]
    total = sum(current, Fraction(0))
    n = minimal_n(subs)

    heap: list[tuple[Fraction, int]] = []
    for i, sub in enumerate(subs):
        gain = current[i] - sub_error(sub, counts[i] + 1, length)
        heapq.heappush(heap, (-gain, i))

    while True:
        yield n, Allocation(tuple(counts)), total
        neg_gain, i = heapq.heappop(heap)
        counts[i] += 1
        current[i] += neg_gain
        total += neg_gain
        n += 1
        nxt = current[i] - sub_error(subs[i], counts[i] + 1, length)
        heapq.heappush(heap, (-nxt, i))


def allocate_greedy(subs: list[SubInterval], n: int) -> Allocation:
    """Optimal allocation by marginal analysis."""
    extra = _check_feasible(subs, n)
    logger.debug(f"Greedy allocation: {extra} points over {len(subs)} subintervals")
    for step, (_, allocation, _) in enumerate(iter_greedy(subs)):
        if step == extra:
            return allocation
    raise AssertionError("unreachable")


def allocate_exhaustive(
    subs: list[SubInterval],
    n: int,
    cap: int = EXHAUSTIVE_CAP,
) -> Allocation:
    """Optimal allocation by trying every composition of the spare points.

    Returns the lexicographically smallest count vector among ties.
    """
    extra = _check_feasible(subs, n)
    parts = len(subs)
    candidates = comb(extra + parts - 1, parts - 1)
    if candidates > cap:
        raise SearchBudgetError(candidates, cap)
    logger.debug(f"Exhaustive allocation: {candidates} candidates")

    length = _support_length(subs)
    base = minimal_counts(subs)
    # errors[i][e] is the error of subinterval i with e spare points
    table = [
        [sub_error(sub, base[i] + e, length) for e in range(extra + 1)]
        for i, sub in enumerate(subs)
    ]
    # Scale to integers so comparisons in the inner loop are plain int ops
    denom = lcm(*(f.denominator for row in table for f in row))
    scaled = [[f.numerator * (denom // f.denominator) for f in row] for row in table]

    best_value: int | None = None
    best_spare: tuple[int, ...] = ()
    spare = [0] * parts

    def visit(i: int, remaining: int, partial: int) -> None:
        nonlocal best_value, best_spare
        if i == parts - 1:
            spare[i] = remaining
            value = partial + scaled[i][remaining]
            if best_value is None or value < best_value:
                best_value = value
                best_spare = tuple(spare)
            return
        for e in range(remaining + 1):
            spare[i] = e
            visit(i + 1, remaining - e, partial + scaled[i][e])

    visit(0, extra, 0)
    return Allocation(tuple(b + e for b, e in zip(base, best_spare)))
