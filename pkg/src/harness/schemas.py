"""
Pydantic schemas for identity checks and report documents.
"""

from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class IdentityId(StrEnum):
    """Identities the harness can check, keyed by their report id."""

    OFFCUT_INTEGRAL = "eq1.1"
    OFFCUT_CAUCHY_INTEGRAL = "eq1.2"
    NEUMANN_INTEGRAL = "eq1.3"
    CLOSURE_ROUNDTRIP = "eq1.4-roundtrip"
    OFFCUT_SERIES = "eq1.5"
    HEINE_SERIES = "eq1.6"
    CUT_COMBINATION = "eq2.3-combination"
    RIGHT_INTEGRAL = "eq2.7"
    LEFT_INTEGRAL_COT = "eq2.8"
    LEFT_INTEGRAL = "eq2.10"
    P_PLUS_SERIES = "eq3.2"
    Q_PLUS_SERIES = "eq3.3"
    P_MINUS_SERIES = "eq3.4"
    Q_MINUS_SERIES = "eq3.5"
    BOUNDARY_SERIES = "eq3.1-boundary"


class ComplexValue(BaseModel):
    """A complex number as it appears in reports."""

    re: float
    im: float

    model_config = ConfigDict(frozen=True)

    @classmethod
    def of(cls, value: complex) -> "ComplexValue":
        return cls(re=value.real, im=value.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


class IdentityParams(BaseModel):
    """Parameters of one identity check; each identity uses a subset."""

    n: int | None = Field(default=None, ge=0)
    lambda_: float | None = Field(default=None, alias="lambda")
    kappa: float | None = None
    x: float | None = None
    t: float | None = None
    z: float | None = None

    model_config = ConfigDict(populate_by_name=True, frozen=True, extra="forbid")


class IdentityReport(BaseModel):
    """Outcome of comparing both sides of one identity."""

    identity_id: IdentityId
    params: IdentityParams
    lhs: float | ComplexValue
    rhs: float | ComplexValue
    abs_err: float
    rel_err: float
    tol: float
    passed: bool = Field(alias="pass")
    diagnostics: dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(populate_by_name=True)


class SweepSummary(BaseModel):
    """Aggregate of a sweep."""

    total: int
    passed: int
    failed: int
    skipped: int = 0
    worst_rel_err: float


class RunSummary(BaseModel):
    """Summary block of a report document."""

    total: int
    passed: int
    skipped: int = 0
    worst_rel_err: float
    wall_time_ms: float


class ReportDocument(BaseModel):
    """Everything one CLI invocation writes to stdout."""

    tool_version: str
    command: str
    reports: list[IdentityReport]
    summary: RunSummary
