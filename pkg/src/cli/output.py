"""
Rendering of report documents and point evaluations for stdout.

JSON uses Python's shortest round-trip float repr, so every printed number
parses back to the exact value computed; non-finite values are written as
Infinity / NaN.
"""

import csv
import io
import json
from collections.abc import Mapping, Sequence
from typing import Any

from src.harness.schemas import ComplexValue, IdentityReport, ReportDocument

CSV_HEADER = (
    "identity_id",
    "n",
    "lambda",
    "kappa",
    "x",
    "t",
    "z",
    "lhs",
    "rhs",
    "abs_err",
    "rel_err",
    "tol",
    "pass",
)


def render_json(payload: ReportDocument | Mapping[str, Any]) -> str:
    data = payload.model_dump(by_alias=True) if isinstance(payload, ReportDocument) else payload
    return json.dumps(data)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, ComplexValue):
        return repr(complex(value))
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def render_csv(reports: Sequence[IdentityReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for report in reports:
        p = report.params
        writer.writerow(
            _cell(v)
            for v in (
                str(report.identity_id),
                p.n,
                p.lambda_,
                p.kappa,
                p.x,
                p.t,
                p.z,
                report.lhs,
                report.rhs,
                report.abs_err,
                report.rel_err,
                report.tol,
                report.passed,
            )
        )
    return buffer.getvalue()


def render_value_csv(value: Mapping[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(value.keys())
    writer.writerow(_cell(v) for v in value.values())
    return buffer.getvalue()
