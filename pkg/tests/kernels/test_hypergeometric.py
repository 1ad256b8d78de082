"""Tests for the Gauss hypergeometric function on [0, 1)."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError
from src.kernels.hypergeometric import hyp2f1_real, hyp2f1_regularized
from src.kernels.types import EvalStatus


@pytest.mark.parametrize("w", [0.1, 0.5, 0.7, 0.9, 0.95, 0.99])
def test_logarithm_case(w):
    """2F1(1, 1; 2; w) = -ln(1 - w)/w, degenerate c - a - b = 0."""
    result = hyp2f1_real(1.0, 1.0, 2.0, w)

    assert result.ok
    assert result.value == pytest.approx(-math.log1p(-w) / w, rel=1e-6)


@pytest.mark.parametrize(
    "a, b, c, w",
    [
        (0.3, 0.7, 1.9, 0.2),
        (0.3, 0.7, 1.9, 0.8),
        (-1.3, 2.2, 0.6, 0.75),
        (1.5, -0.25, 3.1, 0.97),
        (2.5, 3.5, 1.25, 0.4),
    ],
)
def test_against_reference(mp, a, b, c, w):
    expected = float(mp.hyp2f1(a, b, c, w))

    assert hyp2f1_real(a, b, c, w).value == pytest.approx(expected, rel=1e-11)


def test_gauss_limit_neighbourhood(mp):
    """Near w = 1 with an integer c - a - b the value tracks the reference."""
    value = hyp2f1_real(0.5, 0.5, 2.0, 0.999).value

    assert value == pytest.approx(float(mp.hyp2f1(0.5, 0.5, 2.0, 0.999)), rel=1e-6)
    assert abs(value - 4.0 / math.pi) < 3e-3


def test_terminating_series():
    """2F1(-2, b; c; w) is a quadratic polynomial."""
    b, c, w = 3.0, 1.5, 0.7
    expected = 1.0 - 2.0 * b * w / c + b * (b + 1.0) * w * w / (c * (c + 1.0))

    assert hyp2f1_real(-2.0, b, c, w).value == pytest.approx(expected, rel=1e-14)


def test_zero_argument():
    assert hyp2f1_real(0.3, 0.4, 0.5, 0.0).value == 1.0


@pytest.mark.parametrize("w", [-0.1, 1.0, 1.5])
def test_argument_outside_unit_interval(w):
    with pytest.raises(DomainError):
        hyp2f1_real(0.5, 0.5, 1.0, w)


def test_unreachable_pole():
    assert hyp2f1_real(0.5, 0.5, -2.0, 0.3).status is EvalStatus.POLE


def test_regularized_matches_plain():
    a, b, c, w = 0.4, 1.1, 2.6, 0.35

    plain = hyp2f1_real(a, b, c, w).value
    assert hyp2f1_regularized(a, b, c, w).value == pytest.approx(plain / math.gamma(c), rel=1e-14)


@pytest.mark.parametrize("c", [0.0, -1.0, -3.0])
def test_regularized_at_nonpositive_integer_c(mp, c):
    """The regularized function is the limit c -> -m, computed at high precision."""
    a, b, w = 0.7, -1.4, 0.45
    mp.dps = 50
    eps = mp.mpf("1e-30")
    expected = float(mp.rgamma(c + eps) * mp.hyp2f1(a, b, c + eps, w))

    result = hyp2f1_regularized(a, b, c, w)
    assert result.ok
    assert result.value == pytest.approx(expected, rel=1e-10)


@settings(max_examples=300)
@given(
    a=st.floats(-2.0, 2.0),
    b=st.floats(-2.0, 2.0),
    c=st.floats(0.5, 3.0),
    w=st.floats(0.0, 0.5),
)
def test_contiguous_in_a(a, b, c, w):
    """(c-a) F(a-1) + (2a - c + (b-a) w) F(a) + a (w-1) F(a+1) = 0."""
    terms = [
        (c - a) * hyp2f1_real(a - 1.0, b, c, w).value,
        (2.0 * a - c + (b - a) * w) * hyp2f1_real(a, b, c, w).value,
        a * (w - 1.0) * hyp2f1_real(a + 1.0, b, c, w).value,
    ]

    assert abs(sum(terms)) <= 1e-10 * max(1.0, *(abs(term) for term in terms))
