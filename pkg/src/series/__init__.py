"""Abel summation and the Gegenbauer-Legendre series families."""

from src.series.abel import SeriesResult, SeriesStatus, SummationMethod, abel_sum
from src.series.families import (
    SeriesFamily,
    boundary_series_rhs,
    series_lhs,
    series_rhs,
    series_terms,
)

__all__ = [
    "SeriesFamily",
    "SeriesResult",
    "SeriesStatus",
    "SummationMethod",
    "abel_sum",
    "boundary_series_rhs",
    "series_lhs",
    "series_rhs",
    "series_terms",
]
