"""
Abel summation with Richardson extrapolation to r -> 1.

The Abel means A(r) = sum a_n r^n are taken at r_k = 1 - 2^-k and treated
as a function of h = 1 - r; a Romberg-style table with ratio 2 removes the
integer powers of h, and the diagonal of the table is the extrapolant.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.config import get_settings
from src.core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

RESIDUAL_WINDOW = 3

TermSource = Callable[[NDArray[np.int64]], ArrayLike] | ArrayLike


class SeriesStatus(StrEnum):
    OK = "ok"
    NOT_CONVERGED = "not-converged"
    NAN_DETECTED = "nan-detected"


class SummationMethod(StrEnum):
    ABEL = "abel"
    PARTIAL_SUMS = "partial-sums"


@dataclass(frozen=True)
class SeriesResult:
    """Summed value of a series and how it was obtained."""

    value: float
    terms_used: int
    radii: tuple[float, ...]
    extrap_residual: float
    status: SeriesStatus = SeriesStatus.OK
    method: SummationMethod = SummationMethod.ABEL
    extrapolants: tuple[float, ...] = field(default=(), repr=False)

    @property
    def ok(self) -> bool:
        return self.status is SeriesStatus.OK

    def raise_for_status(self) -> "SeriesResult":
        if not self.ok:
            raise ConvergenceError(
                f"series {self.status}: value={self.value}, residual={self.extrap_residual}"
            )
        return self


def abel_term_count(max_level: int, decay: float) -> int:
    """Number of terms so that r_max^N <= e^-decay for r_max = 1 - 2^-max_level."""
    return math.ceil(decay * 2**max_level)


def _materialize(term: TermSource, count: int) -> NDArray[np.float64]:
    if not callable(term):
        return np.asarray(term, dtype=float).ravel()
    index = np.arange(count)
    try:
        values = np.asarray(term(index), dtype=float)
    except (TypeError, ValueError):
        values = np.empty(0)
    if values.shape != index.shape:
        # scalar-only callable
        values = np.array([float(np.asarray(term(np.int64(i)))) for i in index])
    return values


def abel_sum(
    term: TermSource,
    tol: float | None = None,
    *,
    min_level: int | None = None,
    max_level: int | None = None,
    decay: float | None = None,
) -> SeriesResult:
    """
    Abel-sum a real series.

    Args:
        term: Either a vectorised callable mapping an integer index array to
            the terms, or the terms themselves (missing tail taken as zero).
        tol: Accepted extrapolation residual; defaults to SERIES_IDENTITY_TOL.
        min_level, max_level: Radii r_k = 1 - 2^-k for k in this range.
        decay: Terms are generated until r_max^N <= e^-decay.

    Returns:
        SeriesResult whose extrap_residual is the largest spread among the
        last three diagonal extrapolants.

    Raises:
        DomainError: If fewer than three radii are requested.
    """
    settings = get_settings()
    tol = settings.SERIES_IDENTITY_TOL if tol is None else tol
    min_level = settings.ABEL_MIN_LEVEL if min_level is None else min_level
    max_level = settings.ABEL_MAX_LEVEL if max_level is None else max_level
    decay = settings.ABEL_DECAY if decay is None else decay
    if max_level - min_level + 1 < RESIDUAL_WINDOW:
        raise DomainError(
            f"need at least {RESIDUAL_WINDOW} Abel radii, got levels {min_level}..{max_level}"
        )

    values = _materialize(term, abel_term_count(max_level, decay))
    levels = range(min_level, max_level + 1)
    radii = tuple(1.0 - 2.0**-k for k in levels)
    if not np.all(np.isfinite(values)):
        return SeriesResult(
            math.nan, int(values.size), radii, math.inf, SeriesStatus.NAN_DETECTED
        )

    n = np.arange(values.size)
    means = [float(np.dot(values, np.exp(n * math.log1p(-(2.0**-k))))) for k in levels]

    # Richardson table in h = 2^-k; each row halves h
    table: list[list[float]] = []
    for i, mean in enumerate(means):
        row = [mean]
        for j in range(1, i + 1):
            row.append(row[j - 1] + (row[j - 1] - table[i - 1][j - 1]) / (2.0**j - 1.0))
        table.append(row)
    diagonal = tuple(row[-1] for row in table)

    tail = diagonal[-RESIDUAL_WINDOW:]
    residual = max(tail) - min(tail)
    status = SeriesStatus.OK
    if not residual <= tol:
        logger.debug(f"Abel extrapolation residual {residual:.3e} exceeds tol {tol:.1e}")
        status = SeriesStatus.NOT_CONVERGED
    return SeriesResult(
        value=diagonal[-1],
        terms_used=int(values.size),
        radii=radii,
        extrap_residual=residual,
        status=status,
        extrapolants=diagonal,
    )
