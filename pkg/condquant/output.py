"""Machine-readable output records (JSON) and tables (CSV)"""

import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import pandas as pd
from pydantic import BaseModel, field_validator

from .asymptotics.sequence import ErrorSequencePoint
from .core.rational import format_rational
from .core.types import QuantizerResult
from .polygon.geometry import Point2
from .polygon.quantizer import PolygonQuantizer

SCHEMA_VERSION = "1.0"
SCAN_COLUMNS = ["n", "k_alloc", "v_exact", "v_float", "n2_v", "dim_est"]
SEGMENT_POINT_COLUMNS = ["index", "exact", "float", "allocation", "error_exact", "error_float"]
POLYGON_POINT_COLUMNS = ["index", "x", "y", "side_counts", "error", "coefficient"]


def _check_finite(value: Any, path: str = "results") -> None:
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"Non-finite float at {path}")
    if isinstance(value, dict):
        for key, item in value.items():
            _check_finite(item, f"{path}.{key}")
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _check_finite(item, f"{path}[{i}]")


class OutputRecord(BaseModel):
    schema_version: str = SCHEMA_VERSION
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]

    @field_validator("results")
    @classmethod
    def floats_finite(cls, value: dict[str, Any]) -> dict[str, Any]:
        _check_finite(value)
        return value

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.model_validate_json(text)


def exact_value(value: Fraction) -> dict[str, Any]:
    return {"exact": format_rational(value), "float": float(value)}


def point2_value(point: Point2) -> dict[str, float]:
    return {"x": point.x, "y": point.y}


def segment_results(result: QuantizerResult) -> dict[str, Any]:
    return {
        "n": result.n,
        "points": [exact_value(p) for p in result.points],
        "allocation": list(result.allocation.counts),
        "sub_errors": [exact_value(e) for e in result.sub_errors],
        "error": exact_value(result.error),
    }


def polygon_results(quantizer: PolygonQuantizer, coefficient: float) -> dict[str, Any]:
    return {
        "n": quantizer.n,
        "side_counts": list(quantizer.side_counts),
        "points": [point2_value(p) for p in quantizer.points],
        "error": quantizer.error,
        "coefficient": coefficient,
    }


def _join_counts(counts: Sequence[int]) -> str:
    return ";".join(str(c) for c in counts)


def segment_points_frame(result: QuantizerResult) -> pd.DataFrame:
    """One row per point; allocation and error repeat on every row."""
    return pd.DataFrame(
        {
            "index": range(1, result.n + 1),
            "exact": [format_rational(p) for p in result.points],
            "float": [float(p) for p in result.points],
            "allocation": _join_counts(result.allocation.counts),
            "error_exact": format_rational(result.error),
            "error_float": float(result.error),
        },
        columns=SEGMENT_POINT_COLUMNS,
    )


def polygon_points_frame(quantizer: PolygonQuantizer, coefficient: float) -> pd.DataFrame:
    """One row per point; side counts, error and coefficient repeat on every row."""
    return pd.DataFrame(
        {
            "index": range(1, quantizer.n + 1),
            "x": [p.x for p in quantizer.points],
            "y": [p.y for p in quantizer.points],
            "side_counts": _join_counts(quantizer.side_counts),
            "error": quantizer.error,
            "coefficient": coefficient,
        },
        columns=POLYGON_POINT_COLUMNS,
    )


def scan_frame(seq: list[ErrorSequencePoint]) -> pd.DataFrame:
    """One row per n; v_exact is empty when only a float error exists."""
    rows = [
        {
            "n": p.n,
            "k_alloc": _join_counts(p.counts),
            "v_exact": format_rational(p.error_exact) if p.error_exact is not None else "",
            "v_float": p.error_float,
            "n2_v": p.n2_scaled,
            "dim_est": p.dim_estimate,
        }
        for p in sorted(seq, key=lambda p: p.n)
    ]
    return pd.DataFrame(rows, columns=SCAN_COLUMNS)


def write_scan_csv(seq: list[ErrorSequencePoint], out: Path) -> Path:
    out.parent.mkdir(parents=True, exist_ok=True)
    scan_frame(seq).to_csv(out, index=False)
    return out
