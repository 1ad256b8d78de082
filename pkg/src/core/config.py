"""
Application configuration using Pydantic Settings.

Pydantic Settings automatically reads from:
1. Environment variables prefixed with CUTLEG_ (e.g. CUTLEG_MAX_THREADS)
2. .env file (if python-dotenv is installed)

A plain-text key=value file can be layered on top with load_settings();
explicit overrides (command-line flags) win over the file.

Usage:
    from src.core.config import get_settings
    print(get_settings().QUAD_TOL)
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.errors import ConfigError


class Settings(BaseSettings):
    """Numerical defaults, tolerances and accuracy boxes."""

    # Application
    APP_NAME: str = "cutleg"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Quadrature
    QUAD_TOL: float = Field(default=1e-9, gt=0)
    QUAD_MAX_LEVEL: int = Field(default=12, ge=3, le=14)

    # Report tolerances per identity class
    QUADRATURE_IDENTITY_TOL: float = Field(default=1e-7, gt=0)
    SERIES_IDENTITY_TOL: float = Field(default=1e-3, gt=0)
    OFFCUT_SERIES_TOL: float = Field(default=1e-9, gt=0)
    CLOSED_FORM_TOL: float = Field(default=1e-10, gt=0)

    # Domain guards
    DOMAIN_MARGIN: float = Field(default=1e-3, ge=0)
    SERIES_EXCLUSION: float = Field(default=0.05, ge=0)

    # Abel summation: radii r_k = 1 - 2**-k for k in [ABEL_MIN_LEVEL, ABEL_MAX_LEVEL]
    ABEL_MIN_LEVEL: int = Field(default=4, ge=1)
    ABEL_MAX_LEVEL: int = Field(default=12, ge=2, le=16)
    ABEL_DECAY: float = Field(default=40.0, gt=0)
    SERIES_TERM_CAP: int = Field(default=4000, ge=10)

    # Sweeps (None means one worker per core)
    MAX_THREADS: int | None = Field(default=None, ge=1)

    # Accuracy box for Legendre evaluations
    NU_MIN: float = -0.6
    NU_MAX: float = 35.0
    MU_MIN: float = -35.0
    MU_MAX: float = 1.0
    X_MAX: float = 0.999
    Z_MIN: float = 1.001
    Z_MAX: float = 100.0

    model_config = SettingsConfigDict(
        env_prefix="CUTLEG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="forbid",
    )

    @property
    def worker_count(self) -> int:
        """Number of sweep workers actually used."""
        return self.MAX_THREADS or os.cpu_count() or 1


_active: Settings | None = None


@lru_cache
def _environment_settings() -> Settings:
    return Settings()


def get_settings() -> Settings:
    """
    Get the settings every module reads.

    These are the ones installed with activate_settings(), or else a cached
    instance built from the environment (lru_cache, so env vars are read
    once).
    """
    return _active if _active is not None else _environment_settings()


def activate_settings(settings: Settings | None) -> None:
    """Install settings for the whole process; None falls back to the environment."""
    global _active
    _active = settings


def reset_settings() -> None:
    """Drop installed and cached settings (tests, environment changes)."""
    activate_settings(None)
    _environment_settings.cache_clear()


def read_config_file(path: str | Path) -> dict[str, str]:
    """
    Parse a plain-text key=value configuration file.

    Blank lines and lines starting with '#' are ignored; keys are
    upper-cased so 'quad_tol = 1e-10' and 'QUAD_TOL=1e-10' are equivalent.

    Raises:
        ConfigError: If the file is missing or a line has no '='.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e

    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        values[key.strip().upper()] = value.strip()
    return values


def load_settings(
    config_path: str | Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> Settings:
    """
    Build settings from environment, an optional config file and overrides.

    Precedence: overrides > config file > environment > defaults.

    Raises:
        ConfigError: On unreadable files, unknown keys or invalid values.
    """
    values: dict[str, Any] = {}
    if config_path is not None:
        values.update(read_config_file(config_path))
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    if not values:
        return get_settings()
    try:
        return Settings(**values)
    except ValidationError as e:
        raise ConfigError(f"invalid configuration: {e}") from e
