"""Closed-form optimal allocations for the two families with known solutions"""

from fractions import Fraction

from ..core.errors import AllocationInfeasibleError, InvalidProblemError
from ..core.types import Allocation

QUARTER_HALF_MIN_N = 6


def closed_form_quarter_half(n: int) -> tuple[int, int, int]:
    """(k, l, m) counts on [0,1/4], [1/4,1/2], [1/2,1] for beta = {1/4, 1/2}.

    Valid for n >= 6; smaller n are handled by the generic solvers.
    """
    if n < QUARTER_HALF_MIN_N:
        raise AllocationInfeasibleError(
            n,
            QUARTER_HALF_MIN_N,
            f"Closed form for beta={{1/4, 1/2}} holds for n >= {QUARTER_HALF_MIN_N}, got n={n}",
        )
    x, r = divmod(n - 2, 4)
    if r == 0:
        return (x + 1, x + 2, 2 * x + 1)
    if r == 1:
        return (x + 1, x + 2, 2 * x + 2)
    if r == 2:
        return (x + 2, x + 2, 2 * x + 2)
    return (x + 2, x + 2, 2 * x + 3)


def three_piece_error(
    a: Fraction, c: Fraction, d: Fraction, b: Fraction, k: int, l: int, m: int
) -> Fraction:
    """V_{k,l,m} on [a, b] with beta = {c, d}, a < c < d < b."""
    if not a < c < d < b:
        raise InvalidProblemError(f"Expected a < c < d < b, got {a}, {c}, {d}, {b}")
    if k < 1 or m < 1 or l < 2:
        raise AllocationInfeasibleError(k + l + m - 2, 2, f"Counts ({k}, {l}, {m}) violate k, m >= 1, l >= 2")
    return (
        (c - a) ** 3 / (2 * k - 1) ** 2
        + Fraction(1, 4) * (d - c) ** 3 / (l - 1) ** 2
        + (b - d) ** 3 / (2 * m - 1) ** 2
    ) / (3 * (b - a))


def quarter_half_error(k: int, l: int, m: int) -> Fraction:
    return three_piece_error(
        Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1), k, l, m
    )


def quarter_half_bracket(n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds V_{x+2,x+3,2x+3} <= V_n <= V_{x+1,x+2,2x+1}.

    x is the largest integer with 4x + 2 <= n, so 4x+2 <= n <= 4x+6.
    """
    if n < QUARTER_HALF_MIN_N:
        raise AllocationInfeasibleError(n, QUARTER_HALF_MIN_N)
    x = (n - 2) // 4
    return quarter_half_error(x + 2, x + 3, 2 * x + 3), quarter_half_error(x + 1, x + 2, 2 * x + 1)


def closed_form_uniform_grid(k: int, n: int) -> Allocation:
    """Counts on J_j = [(j-1)/k, j/k] for beta = {1/k, ..., 1}.

    With n = mk + l, 0 <= l < k: l = 0 gives (m, m+1, ..., m+1); otherwise the
    first count is m+1 and the l-1 lowest-index fixed subintervals get m+2.
    """
    if k < 1:
        raise InvalidProblemError(f"Grid size must be >= 1, got {k}")
    if n < k:
        raise AllocationInfeasibleError(n, k)
    m, l = divmod(n, k)
    if l == 0:
        return Allocation((m,) + (m + 1,) * (k - 1))
    fixed = [m + 2 if j < l - 1 else m + 1 for j in range(k - 1)]
    return Allocation((m + 1, *fixed))


def uniform_grid_base_error(k: int) -> Fraction:
    """Error when the quantizer is beta itself: (k+3)/(12k^3)."""
    return Fraction(k + 3, 12 * k ** 3)
