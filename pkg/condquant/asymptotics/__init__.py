from .sequence import (
    V_INFINITY,
    ErrorSequencePoint,
    dimension_estimate,
    dimension_slope,
    error_sequence_polygon,
    error_sequence_segment,
    is_nonincreasing,
    polygon_squeeze_holds,
    quarter_half_squeeze_holds,
)

__all__ = [
    "V_INFINITY",
    "ErrorSequencePoint",
    "dimension_estimate",
    "dimension_slope",
    "error_sequence_polygon",
    "error_sequence_segment",
    "is_nonincreasing",
    "polygon_squeeze_holds",
    "quarter_half_squeeze_holds",
]
