"""Ferrers functions on the cut and the phase-removed off-cut Q."""

from src.legendre.ferrers import (
    FerrersMethod,
    FerrersValue,
    cut_boundary_values,
    ferrers_p,
    ferrers_p_sequence,
    ferrers_q,
    ferrers_q_sequence,
)
from src.legendre.offcut import offcut_q_over_gamma, offcut_q_phase_removed

__all__ = [
    "FerrersMethod",
    "FerrersValue",
    "cut_boundary_values",
    "ferrers_p",
    "ferrers_p_sequence",
    "ferrers_q",
    "ferrers_q_sequence",
    "offcut_q_over_gamma",
    "offcut_q_phase_removed",
]
