"""Configuration, logging and error types."""

from src.core.config import (
    Settings,
    activate_settings,
    get_settings,
    load_settings,
    reset_settings,
)
from src.core.errors import ConfigError, ConvergenceError, CutlegError, DomainError

__all__ = [
    "Settings",
    "activate_settings",
    "get_settings",
    "load_settings",
    "reset_settings",
    "ConfigError",
    "ConvergenceError",
    "CutlegError",
    "DomainError",
]
