"""Command-line front end."""

from src.cli.main import build_parser, run_command

__all__ = ["build_parser", "run_command"]
