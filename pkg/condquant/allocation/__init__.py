from .closed_form import (
    QUARTER_HALF_MIN_N,
    closed_form_quarter_half,
    closed_form_uniform_grid,
    quarter_half_bracket,
    quarter_half_error,
    three_piece_error,
    uniform_grid_base_error,
)
from .solver import (
    allocate_exhaustive,
    allocate_greedy,
    allocation_error,
    iter_greedy,
    minimal_counts,
    minimal_n,
)

__all__ = [
    "QUARTER_HALF_MIN_N",
    "allocate_exhaustive",
    "allocate_greedy",
    "allocation_error",
    "closed_form_quarter_half",
    "closed_form_uniform_grid",
    "iter_greedy",
    "minimal_counts",
    "minimal_n",
    "quarter_half_bracket",
    "quarter_half_error",
    "three_piece_error",
    "uniform_grid_base_error",
]
