from .config import Config
from .schema import BoundaryConfig, GridConfig, LloydConfig, RunConfig, ToleranceConfig

__all__ = ["BoundaryConfig", "Config", "GridConfig", "LloydConfig", "RunConfig", "ToleranceConfig"]
