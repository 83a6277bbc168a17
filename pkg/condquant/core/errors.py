"""Exception hierarchy shared by all condquant modules."""

from typing import Optional


class CondQuantError(Exception):
    """Base class for every error raised by condquant."""


class InvalidProblemError(CondQuantError):
    """Raised when a segment problem or polygon spec violates its invariants."""
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class RationalParseError(CondQuantError):
    """Raised when a string cannot be read as an exact rational."""
    def __init__(self, text: str, reason: str = ""):
        self.text = text
        self.reason = reason or f"Not a rational (expected 'p/q' or an integer): {text!r}"
        super().__init__(self.reason)


class AllocationInfeasibleError(CondQuantError):
    """Raised when a point count cannot be realised by any feasible allocation."""
    def __init__(self, n: int, minimum: int, reason: str = ""):
        self.n = n
        self.minimum = minimum
        self.reason = reason or f"n={n} is infeasible; the minimal feasible n is {minimum}"
        super().__init__(self.reason)


class AllocationMismatchError(CondQuantError):
    """Raised when an allocation does not agree with n or with its partition."""
    def __init__(self, counts: list[int], reason: str):
        self.counts = list(counts)
        self.reason = reason
        super().__init__(reason)


class ConditionalViolationError(CondQuantError):
    """Raised when a point set handed to the oracle misses conditional points."""
    def __init__(self, missing: list, reason: Optional[str] = None):
        self.missing = list(missing)
        self.reason = reason or f"Conditional points missing from the quantizer: {[str(p) for p in missing]}"
        super().__init__(self.reason)


class SearchBudgetError(CondQuantError):
    """Raised when an exhaustive search would exceed its candidate budget."""
    def __init__(self, candidates: int, cap: int):
        self.candidates = candidates
        self.cap = cap
        self.reason = f"Exhaustive search needs {candidates} candidates (cap {cap})"
        super().__init__(self.reason)


class GeometryError(CondQuantError):
    """Raised when a geometric identity fails beyond its tolerance."""
    def __init__(self, reason: str, deviation: float = float("nan")):
        self.reason = reason
        self.deviation = deviation
        super().__init__(reason)
