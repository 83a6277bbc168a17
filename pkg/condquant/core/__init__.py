from .errors import (
    AllocationInfeasibleError,
    AllocationMismatchError,
    CondQuantError,
    GeometryError,
    ConditionalViolationError,
    InvalidProblemError,
    RationalParseError,
    SearchBudgetError,
)
from .partition import partition, quarter_half_problem, uniform_grid_problem
from .rational import Rational, format_rational, parse_rational, parse_rational_list
from .types import Allocation, QuantizerResult, SegmentProblem, SubInterval, SubIntervalKind

__all__ = [
    "Allocation",
    "AllocationInfeasibleError",
    "AllocationMismatchError",
    "CondQuantError",
    "GeometryError",
    "ConditionalViolationError",
    "InvalidProblemError",
    "QuantizerResult",
    "Rational",
    "RationalParseError",
    "SearchBudgetError",
    "SegmentProblem",
    "SubInterval",
    "SubIntervalKind",
    "format_rational",
    "parse_rational",
    "parse_rational_list",
    "partition",
    "quarter_half_problem",
    "uniform_grid_problem",
]
