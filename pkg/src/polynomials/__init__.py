"""Gegenbauer polynomials, their renormalized form and expansions."""

from src.polynomials.gegenbauer import (
    ExpansionBasis,
    ExpansionCoeffs,
    gegenbauer_all,
    gegenbauer_coeffs,
    gegenbauer_synth,
    renorm_gegenbauer,
    renorm_gegenbauer_all,
)

__all__ = [
    "ExpansionBasis",
    "ExpansionCoeffs",
    "gegenbauer_all",
    "gegenbauer_coeffs",
    "gegenbauer_synth",
    "renorm_gegenbauer",
    "renorm_gegenbauer_all",
]
