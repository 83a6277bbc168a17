from .geometry import AffineMap2, Point2, PolygonSpec, rotation_map, vertices
from .quantizer import (
    PolygonQuantizer,
    base_side_points,
    boundary_distance,
    exhaustive_side_counts,
    polygon_coefficient,
    polygon_error_mk,
    polygon_quantizer,
    side_counts,
    side_error,
)

__all__ = [
    "AffineMap2",
    "Point2",
    "PolygonQuantizer",
    "PolygonSpec",
    "base_side_points",
    "boundary_distance",
    "exhaustive_side_counts",
    "polygon_coefficient",
    "polygon_error_mk",
    "polygon_quantizer",
    "rotation_map",
    "side_counts",
    "side_error",
    "vertices",
]
