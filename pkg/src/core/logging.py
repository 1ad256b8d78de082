"""
Structured logging configuration.

This module sets up logging that:
- Writes to stderr, because stdout carries the JSON/CSV report document
- Uses one line per record: timestamp | level | logger | message
"""

import logging
import sys


def setup_logging(level: str | int = "WARNING", debug: bool = False) -> logging.Logger:
    """
    Configure logging for the command-line tool.

    Args:
        level: Log level name or number for the cutleg loggers.
        debug: Force DEBUG regardless of level.

    Returns:
        Configured logger instance for the application.
    """
    log_level = logging.DEBUG if debug else level
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
        if not isinstance(log_level, int):
            log_level = logging.WARNING

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,  # Override any existing configuration
    )

    # Module loggers live under the "src" package namespace
    logger = logging.getLogger("src")
    logger.setLevel(log_level)

    return logger
