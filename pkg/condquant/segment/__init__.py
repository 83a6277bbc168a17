from .engine import conditional_quantizer, place_points, sub_error

__all__ = ["conditional_quantizer", "place_points", "sub_error"]
