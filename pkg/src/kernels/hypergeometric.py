"""
Gauss hypergeometric function 2F1(a, b; c; w) for real parameters and 0 <= w < 1.

Small arguments are summed directly. For w > 0.5 the series is moved to
argument 1 - w with the standard connection formula; when c - a - b is
(nearly) an integer the connection coefficients have Gamma poles, so either
the direct series is still summed (w <= 0.9) or c is perturbed by +/- delta
and the two results are averaged.
"""

import logging
import math

from src.core.errors import DomainError
from src.kernels.gamma import gamma_ratio, is_nonpositive_integer, rgamma
from src.kernels.types import EvalStatus, ScalarEval

logger = logging.getLogger(__name__)

ITERATION_CAP = 5000
CONVERGENCE_RTOL = 1e-17
SUSTAINED_TERMS = 3

DIRECT_LIMIT = 0.5
DEGENERATE_DIRECT_LIMIT = 0.9
DEGENERATE_WINDOW = 1e-6
C_PERTURBATION = 1e-7


def _terminating_degree(a: float, b: float) -> int | None:
    """Degree of the polynomial when a or b is a nonpositive integer."""
    degrees = [int(-p) for p in (a, b) if is_nonpositive_integer(p)]
    return min(degrees) if degrees else None


def _series(a: float, b: float, c: float, w: float) -> ScalarEval:
    """Plain power series; the caller guarantees no division by c + k = 0."""
    term = 1.0
    total = 1.0
    small = 0
    for k in range(ITERATION_CAP):
        if a + k == 0.0 or b + k == 0.0:
            return ScalarEval(total)
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * w
        total += term
        if not math.isfinite(total):
            return ScalarEval.overflow(total)
        if abs(term) <= CONVERGENCE_RTOL * abs(total):
            small += 1
            if small >= SUSTAINED_TERMS:
                return ScalarEval(total)
        else:
            small = 0
    return ScalarEval(total, EvalStatus.NOT_CONVERGED)


def _worst(*statuses: EvalStatus) -> EvalStatus:
    for status in (EvalStatus.POLE, EvalStatus.OVERFLOW, EvalStatus.NOT_CONVERGED):
        if status in statuses:
            return status
    return EvalStatus.OK


def _connection(a: float, b: float, c: float, w: float) -> ScalarEval:
    """2F1 via the two series in 1 - w; c - a - b must not be an integer."""
    s = c - a - b
    v = 1.0 - w
    first = gamma_ratio([c, s], [c - a, c - b])
    second = gamma_ratio([c, -s], [a, b])
    if first.status is not EvalStatus.OK or second.status is not EvalStatus.OK:
        return ScalarEval(math.nan, _worst(first.status, second.status))

    value = 0.0
    statuses = []
    if first.value != 0.0:
        f1 = _series(a, b, 1.0 - s, v)
        value += first.value * f1.value
        statuses.append(f1.status)
    if second.value != 0.0:
        f2 = _series(c - a, c - b, 1.0 + s, v)
        value += second.value * v**s * f2.value
        statuses.append(f2.status)
    return ScalarEval(value, _worst(*statuses))


def hyp2f1_real(a: float, b: float, c: float, w: float) -> ScalarEval:
    """
    Evaluate 2F1(a, b; c; w) for real parameters and w in [0, 1).

    Args:
        a, b, c: Real parameters; c may be a nonpositive integer only when
            the series terminates before the division by zero.
        w: Argument in [0, 1).

    Returns:
        ScalarEval with status 'pole' for an unreachable c, 'not-converged'
        when the (post-transformation) series exceeds the iteration cap.

    Raises:
        DomainError: If w is outside [0, 1).
    """
    if not 0.0 <= w < 1.0:
        raise DomainError(f"hyp2f1_real requires 0 <= w < 1, got {w}")
    if w == 0.0:
        return ScalarEval(1.0)

    degree = _terminating_degree(a, b)
    if is_nonpositive_integer(c) and (degree is None or degree >= -c):
        return ScalarEval.pole()
    if degree is not None or w <= DIRECT_LIMIT:
        return _series(a, b, c, w)

    s = c - a - b
    if abs(s - round(s)) < DEGENERATE_WINDOW:
        if w <= DEGENERATE_DIRECT_LIMIT:
            return _series(a, b, c, w)
        logger.debug(
            f"2F1({a}, {b}; {c}; {w}): c-a-b={s} is degenerate, averaging c +/- {C_PERTURBATION}"
        )
        upper = _connection(a, b, c + C_PERTURBATION, w)
        lower = _connection(a, b, c - C_PERTURBATION, w)
        return ScalarEval(
            0.5 * (upper.value + lower.value), _worst(upper.status, lower.status)
        )
    return _connection(a, b, c, w)


def _pochhammer(x: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= x + i
    return out


def hyp2f1_regularized(a: float, b: float, c: float, w: float) -> ScalarEval:
    """
    2F1(a, b; c; w) / Gamma(c), finite for every real c.

    For c = -m the limit (a)_{m+1} (b)_{m+1} w^{m+1} / (m+1)!
    * 2F1(a+m+1, b+m+1; m+2; w) is used.
    """
    if is_nonpositive_integer(c):
        m = int(-c)
        coef = _pochhammer(a, m + 1) * _pochhammer(b, m + 1) * w ** (m + 1) / math.factorial(m + 1)
        if coef == 0.0:
            return ScalarEval(0.0)
        inner = hyp2f1_real(a + m + 1, b + m + 1, m + 2.0, w)
        return ScalarEval(coef * inner.value, inner.status)
    f = hyp2f1_real(a, b, c, w)
    return ScalarEval(rgamma(c) * f.value, f.status)
