"""Tests for the Ferrers functions on the cut."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError
from src.kernels.types import EvalStatus
from src.legendre.ferrers import (
    FerrersMethod,
    cut_boundary_values,
    ferrers_p,
    ferrers_p_sequence,
    ferrers_q,
    ferrers_q_sequence,
)


def _ref_p(mp, nu, mu, x):
    return float(mp.legenp(nu, mu, x, type=2))


def _ref_q(mp, nu, mu, x):
    return float(mp.legenq(nu, mu, x, type=2))


def test_elementary_values():
    x = 0.3
    q0 = 0.5 * math.log((1.0 + x) / (1.0 - x))

    assert ferrers_p(1.0, 0.0, x).value == pytest.approx(x, rel=1e-14)
    assert ferrers_p(1.0, 1.0, x).value == pytest.approx(-math.sqrt(1.0 - x * x), rel=1e-13)
    assert ferrers_q(0.0, 0.0, x).value == pytest.approx(q0, rel=1e-8)
    assert ferrers_q(1.0, 0.0, x).value == pytest.approx(x * q0 - 1.0, rel=1e-8)


@pytest.mark.parametrize(
    "nu, mu, x",
    [
        (0.5, 0.0, 0.2),
        (2.3, -0.7, 0.6),
        (0.25, 0.5, -0.3),
        (3.75, -2.4, 0.9),
        (-0.4, 0.3, 0.45),
        (1.6, -4.25, -0.1),
    ],
)
def test_against_reference(mp, nu, mu, x):
    p = ferrers_p(nu, mu, x)
    q = ferrers_q(nu, mu, x)

    assert p.ok and q.ok
    assert p.value == pytest.approx(_ref_p(mp, nu, mu, x), rel=1e-10, abs=1e-12)
    assert q.value == pytest.approx(_ref_q(mp, nu, mu, x), rel=1e-9, abs=1e-11)


def test_large_degree_uses_recurrence(mp):
    nu, mu, x = 20.3, -1.4, 0.35
    p = ferrers_p(nu, mu, x)

    assert p.method is FerrersMethod.RECURRENCE
    assert p.value == pytest.approx(_ref_p(mp, nu, mu, x), rel=1e-9, abs=1e-12)


def test_reflected_argument(mp):
    nu, mu, x = 1.7, -0.6, -0.85
    p = ferrers_p(nu, mu, x)
    q = ferrers_q(nu, mu, x)

    assert p.method is FerrersMethod.REFLECTION
    assert q.method is FerrersMethod.REFLECTION
    assert p.value == pytest.approx(_ref_p(mp, nu, mu, x), rel=1e-9)
    assert q.value == pytest.approx(_ref_q(mp, nu, mu, x), rel=1e-9)


@pytest.mark.parametrize("mu", [-2.0, -1.0])
def test_integer_order_q(mp, mu):
    nu, x = 1.3, 0.4
    q = ferrers_q(nu, mu, x)

    assert q.method is FerrersMethod.INTEGER_MU_OFFSET
    assert q.status is EvalStatus.OK
    assert q.est_accuracy == 1e-8
    assert q.value == pytest.approx(_ref_q(mp, nu, mu, x), rel=1e-7)


def test_integer_order_on_box_edge(mp):
    """mu = 1 is on the edge of the open accuracy box."""
    q = ferrers_q(1.3, 1.0, 0.4)

    assert q.method is FerrersMethod.INTEGER_MU_OFFSET
    assert q.est_accuracy == math.inf
    assert q.value == pytest.approx(_ref_q(mp, 1.3, 1.0, 0.4), rel=1e-7)


@pytest.mark.parametrize("mu", [-1.0 + 9e-7, -1.0 - 4e-7, -2.0 - 8e-7, 5e-7])
def test_order_just_off_integer(mp, mu):
    """Orders inside the integer window keep their own value, not the integer's."""
    nu, x = 1.3, 0.4
    q = ferrers_q(nu, mu, x)

    assert q.method is FerrersMethod.INTEGER_MU_OFFSET
    assert q.status is EvalStatus.OK
    assert q.value == pytest.approx(_ref_q(mp, nu, mu, x), rel=1e-8)


def _distance_to_integer(v: float) -> float:
    return abs(v - round(v))


@settings(max_examples=60)
@given(
    nu=st.floats(0.1, 5.0),
    m=st.sampled_from([-2, -1, 0]),
    x=st.floats(-0.9, 0.9),
)
def test_integer_order_is_continuous(nu, m, x):
    """The offset value at an integer order joins the combination values beside it."""
    assume(nu + m + 1.0 > 0.05 or _distance_to_integer(nu + m) > 0.05)
    at_integer = ferrers_q(nu, float(m), x)
    beside = 0.5 * (ferrers_q(nu, m + 2e-6, x).value + ferrers_q(nu, m - 2e-6, x).value)
    coarse = ferrers_q(nu, float(m), x, delta=1e-5)

    assert at_integer.status is EvalStatus.OK
    scale = max(1.0, abs(at_integer.value))
    assert abs(at_integer.value - beside) <= 1e-6 * scale
    assert abs(at_integer.value - coarse.value) <= 1e-6 * scale


def test_q_pole():
    """nu + mu + 1 = 0 puts Gamma(nu + mu + 1) on a pole."""
    q = ferrers_q(0.5, -1.5, 0.2)

    assert q.status is EvalStatus.POLE
    assert not q.ok


def test_reflection_relation(rng):
    """Q(x) = -cos(pi(nu+mu)) Q(-x) - (pi/2) sin(pi(nu+mu)) P(-x), x of either sign."""
    for _ in range(500):
        nu = rng.uniform(-0.4, 10.0)
        mu = rng.uniform(-5.0, 0.9)
        x = rng.uniform(-0.95, 0.95)
        s = nu + mu

        lhs = ferrers_q(nu, mu, x, reflect=False).value
        q_minus = ferrers_q(nu, mu, -x, reflect=False).value
        p_minus = ferrers_p(nu, mu, -x, reflect=False).value
        rhs = -math.cos(math.pi * s) * q_minus - 0.5 * math.pi * math.sin(math.pi * s) * p_minus
        scale = max(1.0, abs(lhs), abs(q_minus), abs(p_minus))
        assert abs(lhs - rhs) <= 1e-9 * scale


def test_outside_accuracy_box():
    p = ferrers_p(40.0, 0.0, 0.5)

    assert p.est_accuracy == math.inf


def test_sequences_match_pointwise():
    nu0, mu, x = 0.25, -0.75, 0.55
    ps = ferrers_p_sequence(nu0, mu, x, 12)
    qs = ferrers_q_sequence(nu0, mu, x, 12)

    for k in (0, 1, 5, 11):
        assert ps[k] == pytest.approx(ferrers_p(nu0 + k, mu, x).value, rel=1e-10, abs=1e-12)
        assert qs[k] == pytest.approx(ferrers_q(nu0 + k, mu, x).value, rel=1e-9, abs=1e-11)


def test_sequence_single_term():
    assert ferrers_p_sequence(0.5, 0.0, 0.1, 1).shape == (1,)
    with pytest.raises(DomainError):
        ferrers_p_sequence(0.5, 0.0, 0.1, 0)


def test_cut_boundary_values_are_conjugate():
    nu, mu, x = 1.25, -0.8, 0.3
    upper, lower = cut_boundary_values(nu, mu, x)

    assert lower == upper.conjugate()
    p = ferrers_p(nu, mu, x).value
    q = ferrers_q(nu, mu, x).value
    expected = np.exp(0.5j * math.pi * mu) * (q - 0.5j * math.pi * p)
    assert upper == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x", [-1.0, 1.0, 1.5])
def test_argument_domain(x):
    with pytest.raises(DomainError):
        ferrers_p(0.5, 0.0, x)
    with pytest.raises(DomainError):
        ferrers_q(0.5, 0.0, x)


def test_q_offset_must_be_positive():
    with pytest.raises(DomainError):
        ferrers_q(0.5, 1.0, 0.2, delta=0.0)


@pytest.mark.parametrize(
    "nu, mu, x",
    [
        (0.0, -1.0, -0.6),
        (0.25, -1.25, -0.7),
        (0.75, -1.75, -0.6),
        (1.5, -3.5, -0.9),
    ],
)
def test_p_where_degree_plus_order_is_a_negative_integer(mp, nu, mu, x):
    """nu + mu + 1 <= 0 integer: Q(-x) has a pole, so P skips the reflection."""
    p = ferrers_p(nu, mu, x)

    assert p.ok
    assert p.value == pytest.approx(_ref_p(mp, nu, mu, x), rel=1e-10)
    assert p.value == pytest.approx(ferrers_p(nu, mu, x, reflect=False).value, rel=1e-12)


def test_p_at_order_minus_one():
    # P_0^{-1}(x) = sqrt((1 - x)/(1 + x))
    assert ferrers_p(0.0, -1.0, -0.6).value == pytest.approx(2.0, rel=1e-12)


@settings(max_examples=500)
@given(
    nu=st.floats(-0.4, 10.0),
    mu=st.floats(-5.0, 0.9),
    x=st.floats(-0.95, 0.95),
)
def test_p_reflection_relation(nu, mu, x):
    """P(x) = cos(pi(nu+mu)) P(-x) - (2/pi) sin(pi(nu+mu)) Q(-x), x of either sign."""
    assume(_distance_to_integer(mu) > 1e-3)
    assume(nu + mu + 1.0 > 1e-3 or _distance_to_integer(nu + mu) > 1e-3)
    s = nu + mu

    lhs = ferrers_p(nu, mu, x, reflect=False).value
    p_minus = ferrers_p(nu, mu, -x, reflect=False).value
    q_minus = ferrers_q(nu, mu, -x, reflect=False).value
    rhs = math.cos(math.pi * s) * p_minus - 2.0 / math.pi * math.sin(math.pi * s) * q_minus
    scale = max(1.0, abs(lhs), abs(p_minus), abs(q_minus))
    assert abs(lhs - rhs) <= 1e-9 * scale


@settings(max_examples=200)
@given(
    nu=st.floats(-0.4, 4.0),
    mu=st.floats(-3.0, 0.9),
    x=st.floats(-0.8, 0.8),
)
def test_wronskian(nu, mu, x):
    """(1 - x^2)(P Q' - P' Q) = Gamma(nu+mu+1)/Gamma(nu-mu+1)."""
    assume(_distance_to_integer(mu) > 0.05)
    assume(nu + mu + 1.0 > 0.05 or _distance_to_integer(nu + mu) > 0.05)
    assume(nu - mu + 1.0 > 0.05 or _distance_to_integer(nu - mu) > 0.05)
    h = 1e-4

    def p(at: float) -> float:
        return ferrers_p(nu, mu, at).value

    def q(at: float) -> float:
        return ferrers_q(nu, mu, at).value

    dp = (p(x + h) - p(x - h)) / (2.0 * h)
    dq = (q(x + h) - q(x - h)) / (2.0 * h)
    weight = 1.0 - x * x
    lhs = weight * (p(x) * dq - dp * q(x))
    expected = math.gamma(nu + mu + 1.0) / math.gamma(nu - mu + 1.0)
    scale = max(1.0, abs(expected), weight * abs(p(x) * dq), weight * abs(dp * q(x)))
    assert abs(lhs - expected) <= 1e-6 * scale
