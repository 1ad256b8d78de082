"""
Parameter sweeps: Cartesian grids of identity checks.

Grid points are evaluated in a thread pool; results come back in the
lexicographic order of the axes n, lambda, kappa, x, t, z whatever the
completion order.
"""

import itertools
import logging
import math
from collections.abc import Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.core.config import Settings, get_settings
from src.core.errors import DomainError
from src.harness.identities import CUT_SERIES_IDS, ON_CUT_IDS, REQUIRED_PARAMS, verify_identity
from src.harness.schemas import IdentityId, IdentityParams, IdentityReport, SweepSummary

logger = logging.getLogger(__name__)

# axis names as they appear on the command line, in sweep order
PARAM_ORDER = ("n", "lambda", "kappa", "x", "t", "z")
_FIELD = {"lambda": "lambda_"}

Grid = Mapping[str, Sequence[float]]


@dataclass(frozen=True)
class GridPoint:
    params: IdentityParams
    clipped: dict[str, float] = field(default_factory=dict)


def parse_grid(text: str) -> dict[str, list[float]]:
    """
    Parse "param=start:stop:count,param=value,..." into axis values.

    start:stop:count expands to count evenly spaced values including both
    ends (count 1 gives [start]); n values are rounded to integers.

    Raises:
        DomainError: On unknown parameters or malformed ranges.
    """
    grid: dict[str, list[float]] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, body = item.partition("=")
        name = name.strip()
        if not sep or name not in PARAM_ORDER:
            raise DomainError(f"bad grid item {item!r}; expected param=start:stop:count")
        pieces = body.split(":")
        try:
            if len(pieces) == 1:
                values = [float(pieces[0])]
            elif len(pieces) == 3:
                start, stop, count = float(pieces[0]), float(pieces[1]), int(pieces[2])
                if count < 1:
                    raise DomainError(f"grid count must be positive in {item!r}")
                values = [start] if count == 1 else np.linspace(start, stop, count).tolist()
            else:
                raise DomainError(f"bad grid range {body!r}; expected start:stop:count")
        except ValueError as e:
            raise DomainError(f"bad number in grid item {item!r}") from e
        if name == "n":
            values = [float(round(v)) for v in values]
        grid[name] = values
    return grid


def _clip(identity_id: IdentityId, name: str, value: float, margin: float) -> float:
    if name == "lambda":
        return max(value, -0.5 + margin)
    if name == "kappa" and identity_id in ON_CUT_IDS:
        return min(value, 0.5 - margin)
    if name in ("x", "t"):
        return min(max(value, -1.0 + margin), 1.0 - margin)
    if name == "z":
        return max(value, 1.0 + margin)
    return value


def expand_grid(
    identity_id: IdentityId | str, grid: Grid, settings: Settings | None = None
) -> tuple[list[GridPoint], int]:
    """
    Cartesian product of the axes the identity uses, clipped into its domain.

    Returns the points in sweep order and the number of series points
    dropped because |t - x| falls inside the exclusion window.

    Raises:
        DomainError: If an axis is unknown or a required axis is missing.
    """
    identity_id = IdentityId(identity_id)
    settings = settings or get_settings()
    if not grid or not any(grid.values()):
        return [], 0

    unknown = set(grid) - set(PARAM_ORDER)
    if unknown:
        raise DomainError(f"unknown grid parameters: {', '.join(sorted(unknown))}")
    names = [name for name in PARAM_ORDER if _FIELD.get(name, name) in REQUIRED_PARAMS[identity_id]]
    missing = [name for name in names if name not in grid]
    if missing:
        raise DomainError(f"{identity_id} sweep needs axes: {', '.join(missing)}")
    ignored = set(grid) - set(names)
    if ignored:
        logger.info(f"{identity_id} ignores grid axes {', '.join(sorted(ignored))}")

    margin = settings.DOMAIN_MARGIN
    points: list[GridPoint] = []
    skipped = 0
    for combo in itertools.product(*(grid[name] for name in names)):
        values: dict[str, Any] = {}
        clipped: dict[str, float] = {}
        for name, raw in zip(names, combo, strict=True):
            value = _clip(identity_id, name, float(raw), margin)
            if value != raw:
                clipped[name] = float(raw)
            values[_FIELD.get(name, name)] = int(value) if name == "n" else value
        if identity_id in CUT_SERIES_IDS and abs(values["t"] - values["x"]) < settings.SERIES_EXCLUSION:
            skipped += 1
            continue
        points.append(GridPoint(IdentityParams(**values), clipped))
    return points, skipped


def _evaluate(
    identity_id: IdentityId, point: GridPoint, tol: float | None, settings: Settings
) -> IdentityReport | None:
    try:
        report = verify_identity(identity_id, point.params, tol, settings=settings)
    except DomainError as e:
        logger.info(f"{identity_id} skipped at {point.params.model_dump(exclude_none=True)}: {e}")
        return None
    if point.clipped:
        report.diagnostics["clipped_from"] = point.clipped
    return report


def run_sweep(
    identity_id: IdentityId | str,
    grid: Grid,
    tol: float | None = None,
    *,
    settings: Settings | None = None,
    max_workers: int | None = None,
) -> tuple[list[IdentityReport], SweepSummary]:
    """
    Evaluate an identity over a grid and summarize the outcome.

    Points outside the identity's domain that clipping cannot repair (for
    example a Gamma pole) and series points inside the exclusion window
    are counted as skipped instead of reported.
    """
    identity_id = IdentityId(identity_id)
    settings = settings or get_settings()
    points, skipped = expand_grid(identity_id, grid, settings)
    workers = max_workers or settings.worker_count
    logger.info(f"sweeping {identity_id} over {len(points)} points with {workers} workers")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(lambda p: _evaluate(identity_id, p, tol, settings), points))

    reports = [report for report in outcomes if report is not None]
    skipped += len(outcomes) - len(reports)
    return reports, summarize(reports, skipped)


def sweep(
    identity_id: IdentityId | str,
    grid: Grid,
    tol: float | None = None,
    *,
    settings: Settings | None = None,
    max_workers: int | None = None,
) -> list[IdentityReport]:
    """Reports for every admissible grid point, in sweep order."""
    reports, _ = run_sweep(identity_id, grid, tol, settings=settings, max_workers=max_workers)
    return reports


def worst_rel_err(reports: Sequence[IdentityReport]) -> float:
    """Largest rel_err; a NaN error counts as infinite."""
    worst = 0.0
    for report in reports:
        err = report.rel_err
        worst = max(worst, math.inf if math.isnan(err) else err)
    return worst


def summarize(reports: Sequence[IdentityReport], skipped: int = 0) -> SweepSummary:
    passed = sum(report.passed for report in reports)
    return SweepSummary(
        total=len(reports),
        passed=passed,
        failed=len(reports) - passed,
        skipped=skipped,
        worst_rel_err=worst_rel_err(reports),
    )
