"""Configuration schemas using Pydantic"""

from typing import Literal

from pydantic import BaseModel, Field


class LloydConfig(BaseModel):
    """Conditional Lloyd oracle settings"""
    tol: float = Field(default=1e-12, gt=0)
    max_iter: int = Field(default=100_000, ge=1)
    seeds: int = Field(default=20, ge=1)


class GridConfig(BaseModel):
    """Grid-search oracle settings"""
    step: float = Field(default=1e-4, gt=0)
    refine_tol: float = Field(default=1e-8, gt=0)
    max_candidates: int = Field(default=2_000_000, ge=1)


class BoundaryConfig(BaseModel):
    """Polygon boundary discretization settings"""
    samples: int = Field(default=1_000_000, ge=10_000)
    chunk: int = Field(default=65_536, ge=1)


class ToleranceConfig(BaseModel):
    """Pass/fail thresholds for the verify command"""
    segment_rel: float = 1e-8
    polygon_abs: float = 2e-5


class RunConfig(BaseModel):
    """Execution settings"""
    threads: int = Field(default=1, ge=1)
    log_level: Literal["error", "warn", "info", "debug"] = "warn"
    exhaustive_cap: int = Field(default=1_000_000, ge=1)
