"""Identity checks, closure round trips and parameter sweeps."""

from src.harness.closure import closure_roundtrip, parse_function
from src.harness.identities import default_tolerance, verify_identity
from src.harness.schemas import (
    ComplexValue,
    IdentityId,
    IdentityParams,
    IdentityReport,
    ReportDocument,
    RunSummary,
    SweepSummary,
)
from src.harness.sweep import expand_grid, parse_grid, run_sweep, summarize, sweep

__all__ = [
    "ComplexValue",
    "IdentityId",
    "IdentityParams",
    "IdentityReport",
    "ReportDocument",
    "RunSummary",
    "SweepSummary",
    "closure_roundtrip",
    "default_tolerance",
    "expand_grid",
    "parse_function",
    "parse_grid",
    "run_sweep",
    "summarize",
    "sweep",
    "verify_identity",
]
