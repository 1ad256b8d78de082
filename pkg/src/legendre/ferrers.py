"""
Ferrers functions P_nu^mu(x), Q_nu^mu(x) on the cut -1 < x < 1.

P comes from its hypergeometric representation in w = (1 - x)/2, using
the regularized 2F1 so integer orders never show a spurious Gamma pole.
Large degrees step up from a fractional seed with the three-term degree
recurrence; arguments below -1/2 are reflected to -x. Q is the usual
combination of P^mu and P^-mu, with integer orders reached by a symmetric
offset in mu and one Richardson step.
"""

import cmath
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from src.core.config import get_settings
from src.core.errors import DomainError
from src.kernels.gamma import cos_pi, gamma_ratio, is_nonpositive_integer, sin_pi
from src.kernels.hypergeometric import hyp2f1_regularized
from src.kernels.types import EvalStatus, ScalarEval

logger = logging.getLogger(__name__)

REFLECTION_BELOW = -0.5
RECURRENCE_MIN_DEGREE = 4.0
RECURRENCE_DENOM_FLOOR = 1e-8
INTEGER_MU_WINDOW = 1e-6
DEFAULT_MU_OFFSET = 1e-4
OFFSET_RESIDUAL_LIMIT = 1e-6


class FerrersMethod(StrEnum):
    DIRECT_2F1 = "direct-2f1"
    COMBINATION = "combination"
    INTEGER_MU_OFFSET = "integer-mu-offset"
    RECURRENCE = "recurrence"
    REFLECTION = "reflection"


_NOMINAL_ACCURACY = {
    FerrersMethod.DIRECT_2F1: 1e-12,
    FerrersMethod.RECURRENCE: 1e-12,
    FerrersMethod.REFLECTION: 1e-12,
    FerrersMethod.COMBINATION: 1e-11,
    FerrersMethod.INTEGER_MU_OFFSET: 1e-8,
}


@dataclass(frozen=True)
class FerrersValue:
    """A Ferrers function value with the method that produced it."""

    value: float
    method: FerrersMethod
    est_accuracy: float
    status: EvalStatus = EvalStatus.OK

    @property
    def ok(self) -> bool:
        return self.status is EvalStatus.OK and math.isfinite(self.value)


def _in_accuracy_box(nu: float, mu: float, x: float) -> bool:
    s = get_settings()
    return s.NU_MIN < nu < s.NU_MAX and s.MU_MIN < mu < s.MU_MAX and abs(x) < s.X_MAX


def _package(
    result: ScalarEval, method: FerrersMethod, nu: float, mu: float, x: float
) -> FerrersValue:
    accuracy = _NOMINAL_ACCURACY[method] if _in_accuracy_box(nu, mu, x) else math.inf
    return FerrersValue(value=result.value, method=method, est_accuracy=accuracy, status=result.status)


def _check_x(x: float) -> None:
    if not -1.0 < x < 1.0:
        raise DomainError(f"x must lie in (-1, 1), got {x}")


def _worse(a: EvalStatus, b: EvalStatus) -> EvalStatus:
    return a if a is not EvalStatus.OK else b


def _p_direct(nu: float, mu: float, x: float) -> ScalarEval:
    """((1+x)/(1-x))^(mu/2) * 2F1(-nu, nu+1; 1-mu; (1-x)/2) / Gamma(1-mu)."""
    f = hyp2f1_regularized(-nu, nu + 1.0, 1.0 - mu, 0.5 * (1.0 - x))
    return ScalarEval(((1.0 + x) / (1.0 - x)) ** (0.5 * mu) * f.value, f.status)


def _p_recurrence(nu: float, mu: float, x: float) -> ScalarEval | None:
    """Step up from degree nu - floor(nu); None if a denominator nearly vanishes."""
    base = nu - math.floor(nu)
    prev = _p_direct(base, mu, x)
    cur = _p_direct(base + 1.0, mu, x)
    status = _worse(prev.status, cur.status)
    p_prev, p_cur = prev.value, cur.value
    degree = base + 1.0
    for _ in range(int(math.floor(nu)) - 1):
        denom = degree - mu + 1.0
        if abs(denom) < RECURRENCE_DENOM_FLOOR:
            return None
        p_prev, p_cur = p_cur, ((2.0 * degree + 1.0) * x * p_cur - (degree + mu) * p_prev) / denom
        degree += 1.0
    return ScalarEval(p_cur, status)


def _p_unreflected(nu: float, mu: float, x: float) -> tuple[ScalarEval, FerrersMethod]:
    # P is symmetric under nu -> -nu - 1
    if nu < -0.5:
        nu = -nu - 1.0
    if nu >= RECURRENCE_MIN_DEGREE:
        stepped = _p_recurrence(nu, mu, x)
        if stepped is not None:
            return stepped, FerrersMethod.RECURRENCE
        logger.debug(f"P(nu={nu}, mu={mu}): recurrence denominator vanishes, using 2F1")
    return _p_direct(nu, mu, x), FerrersMethod.DIRECT_2F1


def _p_eval(nu: float, mu: float, x: float, reflect: bool) -> tuple[ScalarEval, FerrersMethod]:
    if not (reflect and x < REFLECTION_BELOW):
        return _p_unreflected(nu, mu, x)
    if is_nonpositive_integer(nu + mu + 1.0):
        # sin(pi(nu+mu)) = 0 meets a pole of Q(-x) here
        return _p_unreflected(nu, mu, x)

    # P(x) = cos(pi(nu+mu)) P(-x) - (2/pi) sin(pi(nu+mu)) Q(-x)
    p, _ = _p_unreflected(nu, mu, -x)
    s = sin_pi(nu + mu)
    value = cos_pi(nu + mu) * p.value
    status = p.status
    if s != 0.0:
        q, q_method = _q_eval(nu, mu, -x, DEFAULT_MU_OFFSET, reflect=False)
        value -= 2.0 / math.pi * s * q.value
        status = _worse(status, q.status)
        if q_method is FerrersMethod.INTEGER_MU_OFFSET:
            return ScalarEval(value, status), q_method
    return ScalarEval(value, status), FerrersMethod.REFLECTION


def _q_combination(nu: float, mu: float, x: float) -> ScalarEval:
    """pi/(2 sin pi mu) [cos(pi mu) P^mu - Gamma(nu+mu+1)/Gamma(nu-mu+1) P^-mu]."""
    p_plus, _ = _p_unreflected(nu, mu, x)
    p_minus, _ = _p_unreflected(nu, -mu, x)
    ratio = gamma_ratio([nu + mu + 1.0], [nu - mu + 1.0])
    status = _worse(_worse(p_plus.status, p_minus.status), ratio.status)
    bracket = cos_pi(mu) * p_plus.value - ratio.value * p_minus.value
    return ScalarEval(0.5 * math.pi / sin_pi(mu) * bracket, status)


def _q_near_integer_order(nu: float, mu: float, x: float, delta: float) -> ScalarEval:
    # offsets are centred on mu itself, so orders just off an integer keep their value
    def symmetric_mean(d: float) -> ScalarEval:
        upper = _q_combination(nu, mu + d, x)
        lower = _q_combination(nu, mu - d, x)
        return ScalarEval(0.5 * (upper.value + lower.value), _worse(upper.status, lower.status))

    coarse = symmetric_mean(delta)
    fine = symmetric_mean(0.5 * delta)
    # the mean is even in the offset, so the error is O(delta^2)
    value = (4.0 * fine.value - coarse.value) / 3.0
    residual = abs(fine.value - coarse.value) / 3.0
    status = _worse(coarse.status, fine.status)
    if status is EvalStatus.OK and residual > OFFSET_RESIDUAL_LIMIT * max(1.0, abs(value)):
        logger.warning(
            f"Q(nu={nu}, mu={mu}, x={x}): integer-order extrapolation residual {residual:.2e}"
        )
        status = EvalStatus.NOT_CONVERGED
    return ScalarEval(value, status)


def _q_eval(
    nu: float, mu: float, x: float, delta: float, reflect: bool
) -> tuple[ScalarEval, FerrersMethod]:
    if is_nonpositive_integer(nu + mu + 1.0):
        return ScalarEval.pole(), FerrersMethod.COMBINATION

    if reflect and x < REFLECTION_BELOW:
        # Q(x) = -cos(pi(nu+mu)) Q(-x) - (pi/2) sin(pi(nu+mu)) P(-x)
        q, q_method = _q_eval(nu, mu, -x, delta, reflect=False)
        s = sin_pi(nu + mu)
        value = -cos_pi(nu + mu) * q.value
        status = q.status
        if s != 0.0:
            p, _ = _p_unreflected(nu, mu, -x)
            value -= 0.5 * math.pi * s * p.value
            status = _worse(status, p.status)
        # the offset error dominates the reflected value
        method = q_method if q_method is FerrersMethod.INTEGER_MU_OFFSET else FerrersMethod.REFLECTION
        return ScalarEval(value, status), method

    if abs(mu - round(mu)) < INTEGER_MU_WINDOW:
        return _q_near_integer_order(nu, mu, x, delta), FerrersMethod.INTEGER_MU_OFFSET
    return _q_combination(nu, mu, x), FerrersMethod.COMBINATION


def ferrers_p(nu: float, mu: float, x: float, *, reflect: bool = True) -> FerrersValue:
    """
    Ferrers function of the first kind P_nu^mu(x) for real degree and order.

    Args:
        nu: Degree.
        mu: Order.
        x: Argument in (-1, 1).
        reflect: Move x < -1/2 to -x with the reflection relation; pass
            False to force the hypergeometric representation.

    Raises:
        DomainError: If x is outside (-1, 1).
    """
    _check_x(x)
    result, method = _p_eval(nu, mu, x, reflect)
    return _package(result, method, nu, mu, x)


def ferrers_q(
    nu: float,
    mu: float,
    x: float,
    *,
    delta: float = DEFAULT_MU_OFFSET,
    reflect: bool = True,
) -> FerrersValue:
    """
    Ferrers function of the second kind Q_nu^mu(x) for real degree and order.

    Orders within 1e-6 of an integer are evaluated at mu +/- delta and
    mu +/- delta/2 and extrapolated; status 'not-converged' flags an
    extrapolation residual above 1e-6. Status 'pole' when nu + mu is a
    negative integer.

    Raises:
        DomainError: If x is outside (-1, 1) or delta is not positive.
    """
    _check_x(x)
    if not delta > 0.0:
        raise DomainError(f"delta must be positive, got {delta}")
    result, method = _q_eval(nu, mu, x, delta, reflect)
    return _package(result, method, nu, mu, x)


def _degree_sequence(
    seed_first: float,
    seed_second: float,
    nu0: float,
    mu: float,
    x: float,
    count: int,
    direct: Callable[[float, float, float], FerrersValue],
) -> NDArray[np.float64]:
    out = [seed_first, seed_second][:count]
    degree = nu0 + 1.0
    for _ in range(2, count):
        denom = degree - mu + 1.0
        if abs(denom) < RECURRENCE_DENOM_FLOOR:
            out.append(direct(degree + 1.0, mu, x).value)
        else:
            out.append(((2.0 * degree + 1.0) * x * out[-1] - (degree + mu) * out[-2]) / denom)
        degree += 1.0
    return np.array(out)


def ferrers_p_sequence(nu0: float, mu: float, x: float, count: int) -> NDArray[np.float64]:
    """P at degrees nu0, nu0 + 1, ..., nu0 + count - 1 by forward degree recurrence."""
    _check_x(x)
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    first = ferrers_p(nu0, mu, x).value
    second = ferrers_p(nu0 + 1.0, mu, x).value if count > 1 else math.nan
    return _degree_sequence(first, second, nu0, mu, x, count, ferrers_p)


def ferrers_q_sequence(nu0: float, mu: float, x: float, count: int) -> NDArray[np.float64]:
    """Q at degrees nu0, nu0 + 1, ..., nu0 + count - 1 by forward degree recurrence."""
    _check_x(x)
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    first = ferrers_q(nu0, mu, x).value
    second = ferrers_q(nu0 + 1.0, mu, x).value if count > 1 else math.nan
    return _degree_sequence(first, second, nu0, mu, x, count, ferrers_q)


def cut_boundary_values(nu: float, mu: float, x: float) -> tuple[complex, complex]:
    """
    Boundary values of the phase-removed off-cut function from above and below:

        e^{+i pi mu/2} [Q - (i pi/2) P],  e^{-i pi mu/2} [Q + (i pi/2) P]

    The two values are complex conjugates.
    """
    p = ferrers_p(nu, mu, x).value
    q = ferrers_q(nu, mu, x).value
    phase = cmath.exp(0.5j * math.pi * mu)
    upper = phase * complex(q, -0.5 * math.pi * p)
    return upper, upper.conjugate()
