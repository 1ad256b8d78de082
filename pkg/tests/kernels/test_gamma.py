"""Tests for the real Gamma function kernels."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError
from src.kernels.gamma import (
    cos_pi,
    gamma_ratio,
    gamma_real,
    is_nonpositive_integer,
    ln_abs_gamma,
    ln_gamma_pos,
    rgamma,
    sin_pi,
)
from src.kernels.types import EvalStatus


@pytest.mark.parametrize(
    "x, expected",
    [
        (5.0, 24.0),
        (0.5, math.sqrt(math.pi)),
        (-0.5, -2.0 * math.sqrt(math.pi)),
        (1.0, 1.0),
        (10.3, math.gamma(10.3)),
        (-3.7, math.gamma(-3.7)),
    ],
)
def test_gamma_values(x, expected):
    result = gamma_real(x)

    assert result.ok
    assert result.value == pytest.approx(expected, rel=1e-13)


def test_gamma_against_reference(mp):
    """Test relative accuracy against 30-digit Gamma over a wide range."""
    for x in (0.01, 0.3, 1.7, 7.25, 33.3, 120.5, -0.3, -7.9, -20.5):
        expected = float(mp.gamma(x))
        assert gamma_real(x).value == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    result = gamma_real(x)

    assert result.status is EvalStatus.POLE
    assert not result.ok


def test_gamma_overflow():
    result = gamma_real(180.0)

    assert result.status is EvalStatus.OVERFLOW
    assert result.value == math.inf


def test_rgamma_is_zero_at_poles():
    assert rgamma(0.0) == 0.0
    assert rgamma(-3.0) == 0.0
    assert rgamma(4.0) == pytest.approx(1.0 / 6.0, rel=1e-15)
    assert rgamma(-0.5) == pytest.approx(-0.5 / math.sqrt(math.pi), rel=1e-14)


def test_exact_trigonometric_zeros():
    """Test that sin(pi x) and cos(pi x) vanish exactly where they should."""
    assert sin_pi(3.0) == 0.0
    assert sin_pi(-2.0) == 0.0
    assert cos_pi(2.5) == 0.0
    assert cos_pi(-0.5) == 0.0
    assert sin_pi(0.5) == 1.0
    assert cos_pi(1.0) == -1.0
    assert sin_pi(0.25) == pytest.approx(math.sqrt(0.5), rel=1e-15)


def test_ln_gamma_pos():
    assert ln_gamma_pos(100.0) == pytest.approx(math.lgamma(100.0), rel=1e-14)
    assert ln_gamma_pos(0.1) == pytest.approx(math.lgamma(0.1), rel=1e-14)

    with pytest.raises(DomainError):
        ln_gamma_pos(0.0)


def test_ln_abs_gamma_negative_argument():
    value, sign = ln_abs_gamma(-2.5)

    assert sign == -1.0
    assert value == pytest.approx(math.lgamma(-2.5), rel=1e-13)

    with pytest.raises(DomainError):
        ln_abs_gamma(-4.0)


def test_gamma_ratio_large_arguments():
    """Test a ratio whose factors overflow individually."""
    result = gamma_ratio([300.5], [300.0])

    expected = math.exp(math.lgamma(300.5) - math.lgamma(300.0))
    assert result.ok
    assert result.value == pytest.approx(expected, rel=1e-12)


def test_gamma_ratio_poles():
    assert gamma_ratio([2.0], [-1.0]).value == 0.0
    assert gamma_ratio([-1.0], [2.0]).status is EvalStatus.POLE


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(0.0)
    assert is_nonpositive_integer(-3.0)
    assert not is_nonpositive_integer(-3.5)
    assert not is_nonpositive_integer(2.0)


@settings(max_examples=300)
@given(x=st.floats(0.5, 20.0))
def test_recursion(x):
    """Gamma(x + 1) = x Gamma(x)."""
    assert gamma_real(x + 1.0).value == pytest.approx(x * gamma_real(x).value, rel=1e-12)


@settings(max_examples=300)
@given(x=st.floats(-5.0, 5.0))
def test_reflection(x):
    """Gamma(x) Gamma(1 - x) = pi / sin(pi x) away from the integers."""
    assume(abs(x - round(x)) > 1e-3)
    product = gamma_real(x).value * gamma_real(1.0 - x).value

    assert product == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-11)
