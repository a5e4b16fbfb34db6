"""
Configuration management for GH Lab.

Handles loading and validation of configuration from various sources:
- Command-line arguments (RunConfig)
- Environment variables (GH_LAB_*)
- Configuration files (gh-lab.yaml)
"""

import os
from pathlib import Path
from typing import Any, Dict, Literal, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError as PydanticValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from gh_lab.core.exceptions import ConfigurationError

DEFAULT_SEED = 20240917
CONFIG_FILE_NAME = "gh-lab.yaml"

OutputFormat = Literal["csv", "json", "markdown"]
Subcommand = Literal[
    "table",
    "verify-theorem1",
    "covering",
    "vr-homology",
    "oracle-gh",
    "odd-map",
    "constants",
]


def _default_threads() -> int:
    return min(4, os.cpu_count() or 1)


class LabSettings(BaseSettings):
    """
    Process-wide settings.

    Precedence: environment (GH_LAB_*) > gh-lab.yaml > defaults.
    """

    model_config = SettingsConfigDict(env_prefix="GH_LAB_", extra="ignore")

    threads: int = Field(default_factory=_default_threads, ge=1, description="Worker cap")
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64, description="Default RNG seed")
    tolerance: float = Field(default=1e-9, gt=0, description="Scale / theorem-check tolerance")
    simplex_budget: int = Field(default=5_000_000, ge=1)
    gh_max_cells: int = Field(default=25, ge=1)
    json_digits: int = Field(default=12, ge=1, le=17)
    validation_samples: int = Field(default=100_000, ge=1)
    chunk_size: int = Field(default=65_536, ge=16)

    @classmethod
    def settings_customise_sources(
            cls,
            settings_cls,
            init_settings,
            env_settings,
            dotenv_settings,
            file_secret_settings,
    ):
        # env first so it wins over values read from the YAML file
        return env_settings, init_settings

    @classmethod
    def load(cls, config_path: Optional[Path] = None) -> "LabSettings":
        """
        Build settings, merging a gh-lab.yaml file when one is found.

        Args:
            config_path: Explicit file; otherwise searched upward from CWD

        Returns:
            Validated settings

        Raises:
            ConfigurationError: If the file is unreadable or invalid
        """
        path = config_path or find_config_file()
        data: Dict[str, Any] = {}

        if path is not None:
            if not path.exists():
                raise ConfigurationError(f"Configuration file not found: {path}")
            try:
                with open(path, "r", encoding="utf-8") as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(f"Invalid YAML in configuration file: {e}")
            if not isinstance(data, dict):
                raise ConfigurationError("Configuration file must contain a mapping")

        try:
            return cls(**data)
        except PydanticValidationError as e:
            raise ConfigurationError(
                "Invalid configuration values",
                details={"path": str(path) if path else None, "errors": e.errors()},
            )


def find_config_file(start_path: Optional[Path] = None) -> Optional[Path]:
    """
    Find gh-lab.yaml by walking up the directory tree.

    Args:
        start_path: Starting directory (defaults to CWD)

    Returns:
        Path to config file if found, None otherwise
    """
    current = start_path or Path.cwd()

    for parent in [current, *current.parents]:
        config_path = parent / CONFIG_FILE_NAME
        if config_path.exists():
            return config_path

    return None


class RunConfig(BaseModel):
    """One CLI invocation, validated before anything is computed."""

    subcommand: Subcommand
    n: Optional[int] = Field(default=None, ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    r: Optional[float] = Field(default=None, gt=0)
    eta: Optional[float] = Field(default=None, gt=0)
    samples: Optional[int] = Field(default=None, gt=0)
    max_dim: Optional[int] = Field(default=None, ge=0)
    budget: Optional[int] = Field(default=None, gt=0)
    max_n: int = Field(default=7, ge=1)
    max_k: int = Field(default=7, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    construction: Optional[str] = None
    metric: Literal["geodesic", "euclidean"] = "geodesic"
    projective: bool = False
    output_format: OutputFormat = "json"
    output_path: Optional[Path] = None
    inputs: Dict[str, Path] = Field(default_factory=dict)

    @field_validator("construction")
    @classmethod
    def normalize_construction(cls, v: Optional[str]) -> Optional[str]:
        """Accept hyphenated spellings of construction tags."""
        if v is None:
            return v
        return v.strip().lower().replace("-", "_")


__all__ = [
    "DEFAULT_SEED",
    "CONFIG_FILE_NAME",
    "LabSettings",
    "RunConfig",
    "find_config_file",
]


_settings: Optional[LabSettings] = None


def get_settings() -> LabSettings:
    """Return the process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = LabSettings.load()
    return _settings


def set_settings(settings: Optional[LabSettings]) -> None:
    """Replace (or with None, reset) the process-wide settings."""
    global _settings
    _settings = settings


__all__ += ["get_settings", "set_settings"]
