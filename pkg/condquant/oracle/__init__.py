from .boundary import boundary_discretization_error
from .exact import VoronoiCell1D, distortion_batch, exact_distortion, float_distortion, voronoi_cells
from .grid import GridResult, grid_search
from .lloyd import LloydResult, lloyd_conditional, lloyd_multi_seed

__all__ = [
    "GridResult",
    "LloydResult",
    "VoronoiCell1D",
    "boundary_discretization_error",
    "distortion_batch",
    "exact_distortion",
    "float_distortion",
    "grid_search",
    "lloyd_conditional",
    "lloyd_multi_seed",
    "voronoi_cells",
]
