"""Conditional optimal quantizer for a given n"""

from ..allocation.solver import allocate_greedy
from ..core.partition import partition
from ..core.types import QuantizerResult, SegmentProblem
from .engine import conditional_quantizer


def optimal_quantizer(problem: SegmentProblem, n: int) -> QuantizerResult:
    """Greedy allocation followed by closed-form placement."""
    allocation = allocate_greedy(partition(problem), n)
    return conditional_quantizer(problem, n, allocation)
