"""Configuration management"""

import json
import os
from pathlib import Path

from pydantic import BaseModel, Field

from .schema import BoundaryConfig, GridConfig, LloydConfig, RunConfig, ToleranceConfig

CONFIG_ENV = "CONDQUANT_CONFIG"


class Config(BaseModel):
    """Main configuration"""
    lloyd: LloydConfig = Field(default_factory=LloydConfig)
    grid: GridConfig = Field(default_factory=GridConfig)
    boundary: BoundaryConfig = Field(default_factory=BoundaryConfig)
    tolerance: ToleranceConfig = Field(default_factory=ToleranceConfig)
    run: RunConfig = Field(default_factory=RunConfig)

    @classmethod
    def load(cls, path: Path | None = None) -> "Config":
        """Load config from file"""
        if path is None:
            env_path = os.environ.get(CONFIG_ENV)
            candidates = [Path(env_path)] if env_path else []
            candidates += [
                Path.cwd() / "condquant.json",
                Path.home() / ".config" / "condquant" / "config.json",
            ]
            for p in candidates:
                if p.exists():
                    path = p
                    break

        if path and path.exists():
            data = json.loads(path.read_text())
            return cls(**data)

        return cls()

    def save(self, path: Path):
        """Save config to file"""
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.model_dump_json(indent=2))
