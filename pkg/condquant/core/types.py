"""Value types for the interval problems"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import AllocationMismatchError, InvalidProblemError


class SubIntervalKind(str, Enum):
    """Which endpoints of a subinterval are forced into the quantizer."""
    LEFT_FREE = "LeftFree"      # [a, c] with a not conditional
    BOTH_FIXED = "BothFixed"    # both endpoints conditional
    RIGHT_FREE = "RightFree"    # [d, b] with b not conditional

    @property
    def min_count(self) -> int:
        return 2 if self is SubIntervalKind.BOTH_FIXED else 1


@dataclass(frozen=True)
class SegmentProblem:
    """Uniform distribution on [a, b] with conditional set beta (sorted, strictly increasing)."""
    a: Fraction
    b: Fraction
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.a < self.b:
            raise InvalidProblemError(f"Support must satisfy a < b, got [{self.a}, {self.b}]")
        if not self.beta:
            raise InvalidProblemError("The conditional set must be nonempty")
        for prev, cur in zip(self.beta, self.beta[1:]):
            if cur == prev:
                raise InvalidProblemError(f"Duplicate conditional point {cur}")
            if cur < prev:
                raise InvalidProblemError("Conditional points must be strictly increasing")
        outside = [p for p in self.beta if p < self.a or p > self.b]
        if outside:
            raise InvalidProblemError(
                f"Conditional points outside [{self.a}, {self.b}]: {[str(p) for p in outside]}"
            )

    @classmethod
    def create(
        cls,
        a: int | Fraction,
        b: int | Fraction,
        beta: Iterable[int | Fraction],
    ) -> "SegmentProblem":
        """Build a problem from unsorted input; duplicates are still rejected."""
        points = sorted(Fraction(p) for p in beta)
        return cls(a=Fraction(a), b=Fraction(b), beta=tuple(points))

    @property
    def length(self) -> Fraction:
        return self.b - self.a

    @property
    def shared_points(self) -> int:
        """Conditional points strictly inside (a, b); each is counted by two subintervals."""
        return sum(1 for p in self.beta if self.a < p < self.b)

    @property
    def min_n(self) -> int:
        return len(self.beta)

    def map_affine(self, scale: Fraction, shift: Fraction) -> "SegmentProblem":
        """Image of the problem under x -> scale*x + shift (scale > 0)."""
        if scale <= 0:
            raise InvalidProblemError(f"Affine scale must be positive, got {scale}")
        return SegmentProblem(
            a=scale * self.a + shift,
            b=scale * self.b + shift,
            beta=tuple(scale * p + shift for p in self.beta),
        )


@dataclass(frozen=True)
class SubInterval:
    lo: Fraction
    hi: Fraction
    kind: SubIntervalKind
    index: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InvalidProblemError(f"Empty subinterval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def min_count(self) -> int:
        return self.kind.min_count


@dataclass(frozen=True)
class Allocation:
    """Point counts per subinterval, shared conditional endpoints counted on both sides."""
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def validate(self, partition: list[SubInterval], n: int | None = None) -> None:
        """Check feasibility against a partition and, optionally, the n + s identity."""
        if len(self.counts) != len(partition):
            raise AllocationMismatchError(
                list(self.counts),
                f"Allocation has {len(self.counts)} counts for {len(partition)} subintervals",
            )
        for count, sub in zip(self.counts, partition):
            if count < sub.min_count:
                raise AllocationMismatchError(
                    list(self.counts),
                    f"Subinterval {sub.index} ({sub.kind.value}) needs at least "
                    f"{sub.min_count} points, got {count}",
                )
        if n is not None:
            shared = len(partition) - 1
            if self.total != n + shared:
                raise AllocationMismatchError(
                    list(self.counts),
                    f"Counts sum to {self.total}, expected n + {shared} = {n + shared}",
                )

    def __str__(self) -> str:
        return ";".join(str(c) for c in self.counts)


@dataclass(frozen=True)
class QuantizerResult:
    points: tuple[Fraction, ...]
    error: Fraction
    allocation: Allocation
    sub_errors: tuple[Fraction, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def error_float(self) -> float:
        return float(self.error)
