"""Tests for Gegenbauer polynomials, expansion and synthesis."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError
from src.polynomials.gegenbauer import (
    ExpansionBasis,
    ExpansionCoeffs,
    gegenbauer_all,
    gegenbauer_coeffs,
    gegenbauer_synth,
    renorm_gegenbauer,
    renorm_gegenbauer_all,
)


def test_low_degrees():
    lam, t = 1.5, 0.3
    values = gegenbauer_all(2, lam, t)

    assert values[0] == 1.0
    assert values[1] == pytest.approx(2.0 * lam * t, rel=1e-15)
    assert values[2] == pytest.approx(2.0 * lam * (1.0 + lam) * t * t - lam, rel=1e-14)


@pytest.mark.parametrize("lam", [-0.3, 0.25, 1.0, 3.5])
def test_against_reference(mp, lam):
    t = np.array([-0.9, -0.2, 0.55, 0.99])
    rows = gegenbauer_all(12, lam, t)

    for n in (3, 7, 12):
        expected = [float(mp.gegenbauer(n, lam, v)) for v in t]
        np.testing.assert_allclose(rows[n], expected, rtol=1e-12, atol=1e-13)


def test_lambda_zero_rejected():
    """C_n^0 vanishes identically; only the renormalized form exists."""
    with pytest.raises(DomainError, match="renorm_gegenbauer"):
        gegenbauer_all(3, 0.0, 0.5)


@pytest.mark.parametrize("bad", [{"lam": -0.5, "t": 0.1}, {"lam": 1.0, "t": 1.2}])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        gegenbauer_all(2, bad["lam"], bad["t"])


def test_renormalized_chebyshev_limit():
    """At lambda = 0 the renormalized polynomials are 2 T_n."""
    t = np.linspace(-1.0, 1.0, 9)
    rows = renorm_gegenbauer_all(6, 0.0, t)

    assert np.all(rows[0] == 1.0)
    for n in range(1, 7):
        np.testing.assert_allclose(rows[n], 2.0 * np.cos(n * np.arccos(t)), atol=1e-14)


def test_renormalized_matches_scaled_plain(rng):
    lam = 0.75
    t = rng.uniform(-1.0, 1.0, 5)
    plain = gegenbauer_all(9, lam, t)
    renorm = renorm_gegenbauer_all(9, lam, t)

    for n in range(10):
        np.testing.assert_allclose(renorm[n], (n + lam) / lam * plain[n], rtol=1e-13, atol=1e-14)


def test_renorm_scalar_and_array_agree():
    scalar = renorm_gegenbauer(5, 1.25, 0.4)

    assert isinstance(scalar, float)
    assert renorm_gegenbauer(5, 1.25, np.array([0.4]))[0] == pytest.approx(scalar, rel=1e-15)
    assert renorm_gegenbauer(0, 1.25, 0.4) == 1.0


def test_parity(rng):
    """C_n(-t) = (-1)^n C_n(t)."""
    t = rng.uniform(-1.0, 1.0, 6)
    rows = gegenbauer_all(8, 0.6, t)
    mirrored = gegenbauer_all(8, 0.6, -t)

    for n in range(9):
        np.testing.assert_allclose(mirrored[n], (-1) ** n * rows[n], rtol=1e-14, atol=1e-15)


def test_coeffs_of_quadratic():
    """t^2 = (U_0 + U_2)/4 in the lambda = 1 basis."""
    expansion = gegenbauer_coeffs(lambda t: t * t, 1.0, 3)

    assert expansion.basis is ExpansionBasis.PLAIN
    np.testing.assert_allclose(expansion.coeffs, [0.25, 0.0, 0.25, 0.0], atol=1e-12)


def test_coeffs_chebyshev_basis():
    """t^2 = 1/2 + (1/4) 2 T_2 in the renormalized lambda = 0 basis."""
    expansion = gegenbauer_coeffs(lambda t: t * t, 0.0, 2)

    assert expansion.basis is ExpansionBasis.RENORMALIZED
    np.testing.assert_allclose(expansion.coeffs, [0.5, 0.0, 0.25], atol=1e-12)


@pytest.mark.parametrize("lam", [-0.25, 0.0, 0.5, 1.0, 2.5])
def test_round_trip_exp(lam):
    t = np.linspace(-1.0, 1.0, 43)[1:-1]
    expansion = gegenbauer_coeffs(np.exp, lam, 20)

    np.testing.assert_allclose(gegenbauer_synth(expansion, t), np.exp(t), atol=1e-10)


def test_synth_scalar():
    expansion = ExpansionCoeffs(lambda_=1.5, coeffs=(1.0, 2.0, 0.5))
    t = 0.3
    c = gegenbauer_all(2, 1.5, t)
    expected = 1.0 + 2.0 * c[1] + 0.5 * c[2]

    value = gegenbauer_synth(expansion, t)
    assert isinstance(value, float)
    assert value == pytest.approx(expected, rel=1e-14)


def test_expansion_coeffs_validation():
    with pytest.raises(DomainError):
        ExpansionCoeffs(lambda_=1.0, coeffs=())
    with pytest.raises(DomainError):
        ExpansionCoeffs(lambda_=1.0, coeffs=(1.0, math.nan))

    assert ExpansionCoeffs(lambda_=1.0, coeffs=(1.0, 2.0)).degree == 1


@settings(max_examples=200)
@given(n=st.integers(0, 15), t=st.floats(-1.0, 1.0))
def test_half_order_is_legendre(n, t):
    """C_n^{1/2} is the Legendre polynomial P_n."""
    expected = np.polynomial.legendre.legval(t, [0.0] * n + [1.0])

    assert gegenbauer_all(n, 0.5, t)[n] == pytest.approx(expected, rel=1e-10, abs=1e-12)
