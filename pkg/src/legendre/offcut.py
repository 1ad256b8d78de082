"""Phase-removed associated Legendre function of the second kind for real z > 1."""

import math

from src.core.errors import DomainError
from src.kernels.gamma import is_nonpositive_integer, ln_abs_gamma
from src.kernels.hypergeometric import hyp2f1_regularized
from src.kernels.types import ScalarEval

_HALF_LN_PI = 0.5 * math.log(math.pi)
_LN_DOUBLE_MAX = 709.78


def _assemble(nu: float, mu: float, z: float, with_gamma: bool) -> ScalarEval:
    if not z > 1.0:
        raise DomainError(f"z must be > 1, got {z}")
    a = nu + mu + 1.0
    if with_gamma and is_nonpositive_integer(a):
        return ScalarEval.pole()

    acosh_z = math.acosh(z)  # ln xi
    u = math.exp(-2.0 * acosh_z)
    f = hyp2f1_regularized(mu + 0.5, a, nu + 1.5, u)
    if f.value == 0.0 or not math.isfinite(f.value):
        return ScalarEval(f.value, f.status)

    ln_gamma, sign = ln_abs_gamma(a) if with_gamma else (0.0, 1.0)
    log_mag = (
        _HALF_LN_PI
        + mu * math.log(2.0)
        + ln_gamma
        + 0.5 * mu * math.log((z - 1.0) * (z + 1.0))
        - a * acosh_z
        + math.log(abs(f.value))
    )
    if log_mag > _LN_DOUBLE_MAX:
        return ScalarEval.overflow(sign * f.value)
    return ScalarEval(math.copysign(math.exp(log_mag), sign * f.value), f.status)


def offcut_q_phase_removed(nu: float, mu: float, z: float) -> ScalarEval:
    """
    Real quantity e^{-i pi mu} Q_nu^mu(z) for z > 1.

    With xi = z + sqrt(z^2 - 1):

        sqrt(pi) 2^mu Gamma(nu+mu+1) (z^2-1)^(mu/2) xi^(-nu-mu-1)
            * 2F1(mu+1/2, nu+mu+1; nu+3/2; xi^-2) / Gamma(nu+3/2)

    The hypergeometric argument stays at or below 1/2 for z >= 1.0607, and
    the regularized 2F1 absorbs the Gamma(nu+3/2) factor, so integer orders
    need no special treatment. The magnitude is assembled in logarithms.

    Raises:
        DomainError: If z <= 1.
    """
    return _assemble(nu, mu, z, with_gamma=True)


def offcut_q_over_gamma(nu: float, mu: float, z: float) -> ScalarEval:
    """
    e^{-i pi mu} Q_nu^mu(z) / Gamma(nu+mu+1) for z > 1.

    Finite where nu + mu + 1 is a nonpositive integer, so callers whose
    prefactor cancels that Gamma pole can take the limit exactly.
    """
    return _assemble(nu, mu, z, with_gamma=False)
