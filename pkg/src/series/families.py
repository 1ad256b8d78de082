"""
Gegenbauer-Legendre series and their closed forms.

With nu_n = n + lambda - 1/2, mu = kappa - lambda and
R_n = ((n + lambda)/lambda) C_n^lambda(t), the families are

    P-plus   sum R_n(t) P_{nu_n}^mu(x)
    Q-plus   sum R_n(t) Q_{nu_n}^mu(x)
    P-minus  sum (-1)^n R_n(t) P_{nu_n}^mu(-x)
    Q-minus  sum (-1)^n R_n(t) Q_{nu_n}^mu(-x)
    offcut   sum R_n(t) e^{-i pi mu} Q_{nu_n}^mu(z),  z > 1

The plus families combine into the boundary values of the offcut series
on the cut, Q-plus -/+ (i pi/2) P-plus.

On the cut the sums converge only in the Abel sense; their limits are
piecewise algebraic in t with a jump at t = x. The off-cut series
converges geometrically and is summed directly.
"""

import logging
import math
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from src.core.config import get_settings
from src.core.errors import DomainError
from src.kernels.gamma import cos_pi, gamma_real, is_nonpositive_integer, rgamma, sin_pi
from src.legendre.ferrers import ferrers_p_sequence, ferrers_q_sequence
from src.legendre.offcut import offcut_q_phase_removed
from src.polynomials.gegenbauer import renorm_gegenbauer_all
from src.series.abel import (
    SeriesResult,
    SeriesStatus,
    SummationMethod,
    abel_sum,
    abel_term_count,
)

logger = logging.getLogger(__name__)

# consecutive negligible terms that end the off-cut partial sums
SUSTAINED_SMALL_TERMS = 3
PARTIAL_SUM_RTOL = 1e-17


class SeriesFamily(StrEnum):
    P_PLUS = "P-plus"
    Q_PLUS = "Q-plus"
    P_MINUS = "P-minus"
    Q_MINUS = "Q-minus"
    OFFCUT = "offcut"

    @property
    def second_kind(self) -> bool:
        return self in (SeriesFamily.Q_PLUS, SeriesFamily.Q_MINUS, SeriesFamily.OFFCUT)

    @property
    def mirrored(self) -> bool:
        return self in (SeriesFamily.P_MINUS, SeriesFamily.Q_MINUS)


def _check_params(family: SeriesFamily, lambda_: float, kappa: float, x: float, t: float) -> None:
    if not lambda_ > -0.5:
        raise DomainError(f"lambda must be > -1/2, got {lambda_}")
    if not -1.0 < t < 1.0:
        raise DomainError(f"t must lie in (-1, 1), got {t}")
    if family.second_kind and is_nonpositive_integer(kappa + 0.5):
        raise DomainError(
            f"kappa + 1/2 must not be a nonpositive integer for {family} series, got kappa={kappa}"
        )
    if family is SeriesFamily.OFFCUT:
        if not x > 1.0:
            raise DomainError(f"z must be > 1 for the offcut series, got {x}")
        return
    if not kappa < 0.5:
        raise DomainError(f"kappa must be < 1/2, got {kappa}")
    if not -1.0 < x < 1.0:
        raise DomainError(f"x must lie in (-1, 1), got {x}")


def series_terms(
    family: SeriesFamily, lambda_: float, kappa: float, x: float, t: float, count: int
) -> NDArray[np.float64]:
    """The first `count` terms of a series family (x is z for the offcut family)."""
    family = SeriesFamily(family)
    _check_params(family, lambda_, kappa, x, t)
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    nu0 = lambda_ - 0.5
    mu = kappa - lambda_
    gegen = renorm_gegenbauer_all(count - 1, lambda_, t)

    if family is SeriesFamily.OFFCUT:
        legendre = np.array([offcut_q_phase_removed(nu0 + n, mu, x).value for n in range(count)])
        return gegen * legendre

    arg = -x if family.mirrored else x
    sequence = ferrers_q_sequence if family.second_kind else ferrers_p_sequence
    terms = gegen * sequence(nu0, mu, arg, count)
    if family.mirrored:
        terms[1::2] *= -1.0
    return terms


def _offcut_partial_sums(
    lambda_: float, kappa: float, z: float, t: float, tol: float
) -> SeriesResult:
    settings = get_settings()
    cap = settings.SERIES_TERM_CAP
    nu0 = lambda_ - 0.5
    mu = kappa - lambda_
    gegen = renorm_gegenbauer_all(cap - 1, lambda_, t)

    total = 0.0
    small = 0
    terms: list[float] = []
    for n in range(cap):
        q = offcut_q_phase_removed(nu0 + n, mu, z)
        term = gegen[n] * q.value
        if not math.isfinite(term):
            return SeriesResult(
                math.nan, n + 1, (), math.inf, SeriesStatus.NAN_DETECTED,
                SummationMethod.PARTIAL_SUMS,
            )
        terms.append(term)
        total += term
        if abs(term) <= PARTIAL_SUM_RTOL * max(1.0, abs(total)):
            small += 1
            if small >= SUSTAINED_SMALL_TERMS:
                return SeriesResult(
                    total, n + 1, (), abs(term), SeriesStatus.OK, SummationMethod.PARTIAL_SUMS
                )
        else:
            small = 0

    logger.info(
        f"offcut series (lambda={lambda_}, kappa={kappa}, z={z}, t={t}) not settled "
        f"after {cap} terms, switching to Abel summation"
    )
    return abel_sum(np.array(terms), tol)


def series_lhs(
    family: SeriesFamily,
    lambda_: float,
    kappa: float,
    x: float,
    t: float,
    tol: float | None = None,
) -> SeriesResult:
    """
    Sum a series family at (lambda, kappa, x, t).

    On-cut families are Abel-summed over the full term budget; the offcut
    family (x is z > 1) is summed by partial sums, falling back to Abel
    summation if the terms do not settle within SERIES_TERM_CAP.

    Raises:
        DomainError: Outside the parameter domain, or when |t - x| is inside
            the exclusion window for an on-cut family.
    """
    family = SeriesFamily(family)
    settings = get_settings()
    _check_params(family, lambda_, kappa, x, t)

    if family is SeriesFamily.OFFCUT:
        offcut_tol = settings.OFFCUT_SERIES_TOL if tol is None else tol
        return _offcut_partial_sums(lambda_, kappa, x, t, offcut_tol)

    if abs(t - x) < settings.SERIES_EXCLUSION:
        raise DomainError(
            f"|t - x| = {abs(t - x):.3g} is inside the exclusion window {settings.SERIES_EXCLUSION}"
        )
    count = abel_term_count(settings.ABEL_MAX_LEVEL, settings.ABEL_DECAY)
    terms = series_terms(family, lambda_, kappa, x, t, count)
    return abel_sum(terms, tol)


def _first_kind_prefactor(lambda_: float, kappa: float) -> float:
    """sqrt(pi) / (2^(lambda - 1/2) Gamma(lambda + 1) Gamma(1/2 - kappa))."""
    return math.sqrt(math.pi) * rgamma(lambda_ + 1.0) * rgamma(0.5 - kappa) / 2.0 ** (lambda_ - 0.5)


def _second_kind_prefactor(lambda_: float, kappa: float) -> float:
    """sqrt(pi) Gamma(kappa + 1/2) / (2^(lambda + 1/2) Gamma(lambda + 1))."""
    return (
        math.sqrt(math.pi)
        * gamma_real(kappa + 0.5).value
        * rgamma(lambda_ + 1.0)
        / 2.0 ** (lambda_ + 0.5)
    )


def series_rhs(family: SeriesFamily, lambda_: float, kappa: float, x: float, t: float) -> float:
    """
    Closed-form value of a series family.

    On the cut the value is a Gamma prefactor times (1 - x^2)^((kappa-lambda)/2)
    times a branch factor in t; for the offcut family it is
    sqrt(pi) Gamma(kappa+1/2) / (2^(lambda+1/2) Gamma(lambda+1))
    * (z^2 - 1)^((kappa-lambda)/2) (z - t)^(-kappa-1/2).

    Raises:
        DomainError: Outside the parameter domain or at t = x.
    """
    family = SeriesFamily(family)
    _check_params(family, lambda_, kappa, x, t)
    power = -kappa - 0.5
    half_mu = 0.5 * (kappa - lambda_)

    if family is SeriesFamily.OFFCUT:
        return (
            _second_kind_prefactor(lambda_, kappa)
            * ((x - 1.0) * (x + 1.0)) ** half_mu
            * (x - t) ** power
        )

    if t == x:
        raise DomainError("the closed form is discontinuous at t = x")
    above = t > x
    distance = abs(t - x) ** power
    base = ((1.0 - x) * (1.0 + x)) ** half_mu

    if family is SeriesFamily.P_PLUS:
        return _first_kind_prefactor(lambda_, kappa) * base * distance if above else 0.0
    if family is SeriesFamily.P_MINUS:
        return 0.0 if above else _first_kind_prefactor(lambda_, kappa) * base * distance

    scale = _second_kind_prefactor(lambda_, kappa) * base * distance
    jump = cos_pi(kappa + 0.5)
    if family is SeriesFamily.Q_PLUS:
        return jump * scale if above else scale
    return scale if above else jump * scale


def boundary_series_rhs(
    lambda_: float, kappa: float, x: float, t: float
) -> tuple[complex, complex]:
    """
    Closed form of sum R_n(t) [Q_{nu_n}^mu(x) -/+ (i pi/2) P_{nu_n}^mu(x)], upper sign first.

    These are the two boundary values x +/- i0 of the offcut series. Below
    t = x both equal the Q-plus value; above it they pick up the phase
    e^{-/+ i pi (kappa + 1/2)}.

    Raises:
        DomainError: Outside the on-cut domain or at t = x.
    """
    _check_params(SeriesFamily.Q_PLUS, lambda_, kappa, x, t)
    if t == x:
        raise DomainError("the closed form is discontinuous at t = x")
    scale = (
        _second_kind_prefactor(lambda_, kappa)
        * ((1.0 - x) * (1.0 + x)) ** (0.5 * (kappa - lambda_))
        * abs(t - x) ** (-kappa - 0.5)
    )
    if t < x:
        return complex(scale), complex(scale)
    upper = scale * complex(cos_pi(kappa + 0.5), -sin_pi(kappa + 0.5))
    return upper, upper.conjugate()
