"""
Configuration management for framewigner
"""
import json
import logging
import os
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "FRAMEWIGNER_CONFIG"
DEFAULT_CONFIG_NAME = "framewigner.json"


class NumericsConfig(BaseModel):
    """Tolerances and experiment defaults"""
    tight_tol: float = 1e-10
    eigen_floor: float = 1e-12  # below this S is treated as singular
    hermitian_tol: float = 1e-10
    unitary_tol: float = 1e-10
    permutation_tol: float = 1e-10
    psd_tol: float = 1e-10
    trace_tol: float = 1e-10
    gaussian_cutoff: float = 1e-17  # wrap-sum terms below this are dropped
    table1_m_values: List[int] = Field(
        default_factory=lambda: [3, 4, 5, 6, 7, 8, 9, 10, 15, 20, 30, 40, 50, 60, 70, 80, 90, 100]
    )
    table2_kappas: List[float] = Field(default_factory=lambda: [0.5, 1.0])
    table2_m_values: List[int] = Field(default_factory=lambda: [3, 5, 7, 9, 11, 21])
    noise_epsilon: float = 0.01
    noise_trials: int = 2000
    seed: int = 0


class ConfigManager:
    """Loads numerics settings from an optional JSON file"""

    def __init__(self, config_file: Optional[Path] = None):
        if config_file is None:
            config_file = Path(os.getenv(CONFIG_ENV_VAR, DEFAULT_CONFIG_NAME))
        self.config_file = Path(config_file)
        self._load_config()

    def _load_config(self):
        """Load configuration from disk, falling back to defaults"""
        data = {}
        if self.config_file.exists():
            data = self._load_json(self.config_file)
            logger.debug(f"Loaded numerics config from {self.config_file}")
        self.config = {"numerics": NumericsConfig(**data.get("numerics", {}))}

    def _load_json(self, file_path: Path) -> dict:
        """Load JSON file"""
        with open(file_path, 'r') as f:
            return json.load(f)

    def _save_json(self, file_path: Path, data: dict):
        """Save JSON file"""
        with open(file_path, 'w') as f:
            json.dump(data, f, indent=2, default=str)

    def get_numerics(self) -> NumericsConfig:
        """Get numerics configuration"""
        return self.config["numerics"]

    def update_numerics(self, **updates) -> NumericsConfig:
        """Replace selected numerics settings in memory"""
        current = self.config["numerics"].model_dump()
        current.update(updates)
        self.config["numerics"] = NumericsConfig(**current)
        return self.config["numerics"]

    def save(self):
        """Write the current configuration to the config file"""
        self._save_json(self.config_file, {"numerics": self.config["numerics"].model_dump()})


def resolve(value: Optional[float], name: str) -> float:
    """Return value, or the configured default for the named setting"""
    if value is not None:
        return value
    return getattr(config_manager.get_numerics(), name)


# Global config manager instance
config_manager = ConfigManager()
