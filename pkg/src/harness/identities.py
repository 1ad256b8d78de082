"""
Closed forms and the identity checks built on them.

Every check computes a left-hand side numerically (tanh-sinh quadrature or
series summation) and a right-hand side from Gamma factors and Legendre
functions, then compares the two with a mixed absolute/relative tolerance.

Shared notation: nu = n + lambda - 1/2, mu = kappa - lambda, and the degree
factor d_n = (n + lambda) Gamma(n + 2 lambda) / n!.
"""

import cmath
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.core.config import Settings, get_settings
from src.core.errors import DomainError
from src.harness.schemas import ComplexValue, IdentityId, IdentityParams, IdentityReport
from src.kernels.gamma import cos_pi, gamma_ratio, gamma_real, is_nonpositive_integer, rgamma
from src.legendre.ferrers import cut_boundary_values, ferrers_p, ferrers_q
from src.legendre.offcut import offcut_q_over_gamma, offcut_q_phase_removed
from src.quadrature.integrals import (
    integral_left_lhs,
    integral_offcut_lhs,
    integral_right_lhs,
)
from src.series.families import SeriesFamily, boundary_series_rhs, series_lhs, series_rhs

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
# distance of kappa + 1/2 from a pole below which the cot form uses its limit
COT_POLE_WINDOW = 1e-12
# agreement required between the cot form and the simplified left-integral form
RHS_COHERENCE_TOL = 1e-10

QUADRATURE_IDS = frozenset(
    {
        IdentityId.OFFCUT_INTEGRAL,
        IdentityId.OFFCUT_CAUCHY_INTEGRAL,
        IdentityId.NEUMANN_INTEGRAL,
        IdentityId.CUT_COMBINATION,
        IdentityId.RIGHT_INTEGRAL,
        IdentityId.LEFT_INTEGRAL_COT,
        IdentityId.LEFT_INTEGRAL,
    }
)
CUT_SERIES = {
    IdentityId.P_PLUS_SERIES: SeriesFamily.P_PLUS,
    IdentityId.Q_PLUS_SERIES: SeriesFamily.Q_PLUS,
    IdentityId.P_MINUS_SERIES: SeriesFamily.P_MINUS,
    IdentityId.Q_MINUS_SERIES: SeriesFamily.Q_MINUS,
}
# Abel-summed on the cut, subject to the exclusion window around t = x
CUT_SERIES_IDS = frozenset({*CUT_SERIES, IdentityId.BOUNDARY_SERIES})
OFFCUT_SERIES_IDS = frozenset({IdentityId.OFFCUT_SERIES, IdentityId.HEINE_SERIES})
# identities whose kappa must stay below 1/2
ON_CUT_IDS = frozenset(
    {
        IdentityId.CUT_COMBINATION,
        IdentityId.RIGHT_INTEGRAL,
        IdentityId.LEFT_INTEGRAL_COT,
        IdentityId.LEFT_INTEGRAL,
        *CUT_SERIES_IDS,
    }
)

# parameters each identity reads, in sweep order
REQUIRED_PARAMS: dict[IdentityId, tuple[str, ...]] = {
    IdentityId.OFFCUT_INTEGRAL: ("n", "lambda_", "kappa", "z"),
    IdentityId.OFFCUT_CAUCHY_INTEGRAL: ("n", "lambda_", "z"),
    IdentityId.NEUMANN_INTEGRAL: ("n", "z"),
    IdentityId.CLOSURE_ROUNDTRIP: ("n", "lambda_"),
    IdentityId.OFFCUT_SERIES: ("lambda_", "kappa", "t", "z"),
    IdentityId.HEINE_SERIES: ("t", "z"),
    IdentityId.CUT_COMBINATION: ("n", "lambda_", "kappa", "x"),
    IdentityId.RIGHT_INTEGRAL: ("n", "lambda_", "kappa", "x"),
    IdentityId.LEFT_INTEGRAL_COT: ("n", "lambda_", "kappa", "x"),
    IdentityId.LEFT_INTEGRAL: ("n", "lambda_", "kappa", "x"),
    **{identity: ("lambda_", "kappa", "x", "t") for identity in CUT_SERIES_IDS},
}


def default_tolerance(identity_id: IdentityId, settings: Settings | None = None) -> float:
    settings = settings or get_settings()
    if identity_id in QUADRATURE_IDS:
        return settings.QUADRATURE_IDENTITY_TOL
    if identity_id in CUT_SERIES_IDS:
        return settings.SERIES_IDENTITY_TOL
    if identity_id in OFFCUT_SERIES_IDS:
        return settings.OFFCUT_SERIES_TOL
    return settings.CLOSED_FORM_TOL


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def degree_factor(n: int, lambda_: float) -> float:
    """(n + lambda) Gamma(n + 2 lambda) / n!, finite at lambda = 0."""
    if n == 0:
        return 0.5 * gamma_real(2.0 * lambda_ + 1.0).value
    return (n + lambda_) * gamma_ratio([n + 2.0 * lambda_], [n + 1.0]).value


def _second_kind_scale(n: int, lambda_: float, kappa: float) -> float:
    """sqrt(pi) d_n / (2^(lambda - 3/2) Gamma(lambda + 1) Gamma(kappa + 1/2))."""
    return (
        SQRT_PI
        * degree_factor(n, lambda_)
        * rgamma(kappa + 0.5)
        * rgamma(lambda_ + 1.0)
        / 2.0 ** (lambda_ - 1.5)
    )


def _first_kind_scale(n: int, lambda_: float, kappa: float) -> float:
    """sqrt(pi) d_n Gamma(1/2 - kappa) / (2^(lambda - 1/2) Gamma(lambda + 1))."""
    return (
        SQRT_PI
        * degree_factor(n, lambda_)
        * gamma_real(0.5 - kappa).value
        * rgamma(lambda_ + 1.0)
        / 2.0 ** (lambda_ - 0.5)
    )


def _rising(a: float, n: int) -> float:
    """Pochhammer symbol (a)_n = Gamma(a + n) / Gamma(a), finite at poles of Gamma(a)."""
    return math.prod(a + j for j in range(n))


def offcut_integral_rhs(n: int, lambda_: float, kappa: float, z: float) -> float:
    """
    Closed form of the off-cut Gegenbauer integral via the phase-removed Q.

    Gamma(n+kappa+1/2) inside Q and 1/Gamma(kappa+1/2) in the prefactor are
    combined into (kappa+1/2)_n, which keeps n + kappa + 1/2 in {0, -1, ...}
    finite.
    """
    q = offcut_q_over_gamma(n + lambda_ - 0.5, kappa - lambda_, z)
    z2m1 = (z - 1.0) * (z + 1.0)
    scale = (
        SQRT_PI
        * degree_factor(n, lambda_)
        * _rising(kappa + 0.5, n)
        * rgamma(lambda_ + 1.0)
        / 2.0 ** (lambda_ - 1.5)
    )
    return scale * z2m1 ** (0.5 * (lambda_ - kappa)) * q.value


def right_integral_rhs(n: int, lambda_: float, kappa: float, x: float) -> float:
    """Closed form of the integral over (x, 1) in terms of P at x."""
    p = ferrers_p(n + lambda_ - 0.5, kappa - lambda_, x)
    return (
        _first_kind_scale(n, lambda_, kappa)
        * ((1.0 - x) * (1.0 + x)) ** (0.5 * (lambda_ - kappa))
        * p.value
    )


def left_integral_rhs(n: int, lambda_: float, kappa: float, x: float) -> float:
    """Closed form of the integral over (-1, x) in terms of P at -x."""
    p = ferrers_p(n + lambda_ - 0.5, kappa - lambda_, -x)
    sign = -1.0 if n % 2 else 1.0
    return (
        sign
        * _first_kind_scale(n, lambda_, kappa)
        * ((1.0 - x) * (1.0 + x)) ** (0.5 * (lambda_ - kappa))
        * p.value
    )


def left_integral_cot_rhs(
    n: int, lambda_: float, kappa: float, x: float
) -> tuple[float, bool]:
    """
    The integral over (-1, x) as Q - (pi/2) P cot(pi(kappa + 1/2)).

    Returns the value and whether the finite limit of
    cot(pi(kappa+1/2)) / Gamma(kappa+1/2) was substituted near a pole.
    """
    nu = n + lambda_ - 0.5
    mu = kappa - lambda_
    p = ferrers_p(nu, mu, x).value
    scale = (
        SQRT_PI
        * degree_factor(n, lambda_)
        * rgamma(lambda_ + 1.0)
        / 2.0 ** (lambda_ - 1.5)
        * ((1.0 - x) * (1.0 + x)) ** (0.5 * (lambda_ - kappa))
    )
    s = kappa + 0.5
    near_pole = s <= 0.0 and abs(s - round(s)) < COT_POLE_WINDOW
    if near_pole:
        # cot(pi s) / Gamma(s) -> cos(pi s) Gamma(1 - s) / pi
        cot_over_gamma = cos_pi(s) * gamma_real(1.0 - s).value / math.pi
    else:
        cot_over_gamma = rgamma(s) * cos_pi(s) / math.sin(math.pi * s)
    # at a pole of Gamma(s) the Q term drops out, and Q itself may be singular
    q_term = 0.0 if rgamma(s) == 0.0 else rgamma(s) * ferrers_q(nu, mu, x).value
    return scale * (q_term - 0.5 * math.pi * p * cot_over_gamma), near_pole


def combination_rhs(n: int, lambda_: float, kappa: float, x: float) -> tuple[complex, complex]:
    """
    Closed form of the integral over (-1, 1) against (x +/- i0 - t)^(-kappa-1/2),
    upper sign first, assembled from the boundary values of the off-cut Q.

    Raises:
        DomainError: If kappa + 1/2 is a nonpositive integer (Q has a pole there).
    """
    if is_nonpositive_integer(kappa + 0.5):
        raise DomainError(f"kappa + 1/2 must not be a nonpositive integer, got kappa={kappa}")
    mu = kappa - lambda_
    upper, lower = cut_boundary_values(n + lambda_ - 0.5, mu, x)
    scale = _second_kind_scale(n, lambda_, kappa) * ((1.0 - x) * (1.0 + x)) ** (
        0.5 * (lambda_ - kappa)
    )
    return (
        scale * cmath.exp(-0.5j * math.pi * mu) * upper,
        scale * cmath.exp(0.5j * math.pi * mu) * lower,
    )


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


@dataclass
class _Sides:
    lhs: float | complex
    rhs: float | complex
    converged: bool = True
    coherent: bool = True
    diagnostics: dict[str, Any] = field(default_factory=dict)


def _values(params: IdentityParams, identity_id: IdentityId) -> dict[str, Any]:
    values = params.model_dump()
    missing = [name.rstrip("_") for name in REQUIRED_PARAMS[identity_id] if values[name] is None]
    if missing:
        raise DomainError(f"{identity_id} needs parameters: {', '.join(missing)}")
    return values


def check_domain(identity_id: IdentityId, params: IdentityParams, margin: float) -> None:
    """
    Reject parameters outside an identity's domain (shrunk by margin).

    Raises:
        DomainError: With a message naming the offending parameter.
    """
    v = _values(params, identity_id)
    lam = v["lambda_"]
    if lam is not None and lam < -0.5 + margin:
        raise DomainError(f"lambda must be > -1/2 (margin {margin}), got {lam}")
    if identity_id in ON_CUT_IDS and v["kappa"] is not None and v["kappa"] > 0.5 - margin:
        raise DomainError(f"kappa must be < 1/2 (margin {margin}), got {v['kappa']}")
    for name in ("x", "t"):
        value = v[name]
        if value is not None and abs(value) > 1.0 - margin:
            raise DomainError(f"{name} must lie in (-1, 1) (margin {margin}), got {value}")
    if v["z"] is not None and v["z"] < 1.0 + margin:
        raise DomainError(f"z must be > 1 (margin {margin}), got {v['z']}")


def _quad_sides(result_lhs: Any, rhs: float) -> _Sides:
    return _Sides(
        lhs=result_lhs.value,
        rhs=rhs,
        converged=result_lhs.ok,
        diagnostics={"lhs_status": str(result_lhs.status), "quad_err_est": result_lhs.err_est},
    )


def _offcut_integral(v: dict[str, Any], qtol: float) -> _Sides:
    n, lam, kappa, z = v["n"], v["lambda_"], v["kappa"], v["z"]
    rhs = offcut_integral_rhs(n, lam, kappa, z)
    return _quad_sides(integral_offcut_lhs(n, lam, kappa, z, qtol), rhs)


def _offcut_cauchy_integral(v: dict[str, Any], qtol: float) -> _Sides:
    return _offcut_integral({**v, "kappa": 0.5}, qtol)


def _neumann_integral(v: dict[str, Any], qtol: float) -> _Sides:
    n, z = v["n"], v["z"]
    result = integral_offcut_lhs(n, 0.5, 0.5, z, qtol)
    sides = _quad_sides(result, 2.0 * offcut_q_phase_removed(float(n), 0.0, z).value)
    sides.lhs = result.value / (2 * n + 1)
    return sides


def _right_integral(v: dict[str, Any], qtol: float) -> _Sides:
    n, lam, kappa, x = v["n"], v["lambda_"], v["kappa"], v["x"]
    return _quad_sides(integral_right_lhs(n, lam, kappa, x, qtol), right_integral_rhs(n, lam, kappa, x))


def _left_integral(v: dict[str, Any], qtol: float) -> _Sides:
    n, lam, kappa, x = v["n"], v["lambda_"], v["kappa"], v["x"]
    return _quad_sides(integral_left_lhs(n, lam, kappa, x, qtol), left_integral_rhs(n, lam, kappa, x))


def _left_integral_cot(v: dict[str, Any], qtol: float) -> _Sides:
    n, lam, kappa, x = v["n"], v["lambda_"], v["kappa"], v["x"]
    rhs, used_limit = left_integral_cot_rhs(n, lam, kappa, x)
    sides = _quad_sides(integral_left_lhs(n, lam, kappa, x, qtol), rhs)
    simplified = left_integral_rhs(n, lam, kappa, x)
    sides.diagnostics["simplified_rhs"] = simplified
    coherence = abs(rhs - simplified)
    q_accuracy = 0.0 if used_limit else ferrers_q(n + lam - 0.5, kappa - lam, x).est_accuracy
    limit = max(RHS_COHERENCE_TOL, 100.0 * q_accuracy) * max(1.0, abs(simplified))
    sides.diagnostics["rhs_coherence"] = coherence
    sides.diagnostics["rhs_coherence_limit"] = limit
    sides.coherent = coherence <= limit
    if used_limit:
        sides.diagnostics["cot_limit"] = "kappa + 1/2 at a pole; finite limit substituted"
    return sides


def _cut_combination(v: dict[str, Any], qtol: float) -> _Sides:
    n, lam, kappa, x = v["n"], v["lambda_"], v["kappa"], v["x"]
    rhs_upper, rhs_lower = combination_rhs(n, lam, kappa, x)
    left = integral_left_lhs(n, lam, kappa, x, qtol)
    right = integral_right_lhs(n, lam, kappa, x, qtol)
    phase = cmath.exp(-1j * math.pi * (kappa + 0.5))
    lhs_upper = left.value + phase * right.value
    lhs_lower = left.value + phase.conjugate() * right.value
    return _Sides(
        lhs=lhs_upper,
        rhs=rhs_upper,
        converged=left.ok and right.ok,
        diagnostics={
            "lhs_lower": [lhs_lower.real, lhs_lower.imag],
            "rhs_lower": [rhs_lower.real, rhs_lower.imag],
            "abs_err_lower": abs(lhs_lower - rhs_lower),
            "lhs_status": f"{left.status},{right.status}",
        },
    )


def _series_sides(result: Any, rhs: float) -> _Sides:
    return _Sides(
        lhs=result.value,
        rhs=rhs,
        converged=result.ok,
        diagnostics={
            "lhs_status": str(result.status),
            "method": str(result.method),
            "terms_used": result.terms_used,
            "extrap_residual": result.extrap_residual,
        },
    )


def _offcut_series(v: dict[str, Any], tol: float) -> _Sides:
    lam, kappa, z, t = v["lambda_"], v["kappa"], v["z"], v["t"]
    result = series_lhs(SeriesFamily.OFFCUT, lam, kappa, z, t, tol)
    return _series_sides(result, series_rhs(SeriesFamily.OFFCUT, lam, kappa, z, t))


def _heine_series(v: dict[str, Any], tol: float) -> _Sides:
    z, t = v["z"], v["t"]
    result = series_lhs(SeriesFamily.OFFCUT, 0.5, 0.5, z, t, tol)
    return _series_sides(result, 1.0 / (z - t))


def _cut_series(identity_id: IdentityId) -> Callable[[dict[str, Any], float], _Sides]:
    family = CUT_SERIES[identity_id]

    def check(v: dict[str, Any], tol: float) -> _Sides:
        lam, kappa, x, t = v["lambda_"], v["kappa"], v["x"], v["t"]
        result = series_lhs(family, lam, kappa, x, t, tol)
        return _series_sides(result, series_rhs(family, lam, kappa, x, t))

    return check


def _boundary_series(v: dict[str, Any], tol: float) -> _Sides:
    lam, kappa, x, t = v["lambda_"], v["kappa"], v["x"], v["t"]
    rhs_upper, rhs_lower = boundary_series_rhs(lam, kappa, x, t)
    q = series_lhs(SeriesFamily.Q_PLUS, lam, kappa, x, t, tol)
    p = series_lhs(SeriesFamily.P_PLUS, lam, kappa, x, t, tol)
    lhs_upper = complex(q.value, -0.5 * math.pi * p.value)
    lhs_lower = lhs_upper.conjugate()
    return _Sides(
        lhs=lhs_upper,
        rhs=rhs_upper,
        converged=q.ok and p.ok,
        diagnostics={
            "lhs_lower": [lhs_lower.real, lhs_lower.imag],
            "rhs_lower": [rhs_lower.real, rhs_lower.imag],
            "abs_err_lower": abs(lhs_lower - rhs_lower),
            "lhs_status": f"{q.status},{p.status}",
            "terms_used": q.terms_used,
            "extrap_residual": max(q.extrap_residual, p.extrap_residual),
        },
    )


_QUADRATURE_CHECKS: dict[IdentityId, Callable[[dict[str, Any], float], _Sides]] = {
    IdentityId.OFFCUT_INTEGRAL: _offcut_integral,
    IdentityId.OFFCUT_CAUCHY_INTEGRAL: _offcut_cauchy_integral,
    IdentityId.NEUMANN_INTEGRAL: _neumann_integral,
    IdentityId.CUT_COMBINATION: _cut_combination,
    IdentityId.RIGHT_INTEGRAL: _right_integral,
    IdentityId.LEFT_INTEGRAL_COT: _left_integral_cot,
    IdentityId.LEFT_INTEGRAL: _left_integral,
}
_SERIES_CHECKS: dict[IdentityId, Callable[[dict[str, Any], float], _Sides]] = {
    IdentityId.OFFCUT_SERIES: _offcut_series,
    IdentityId.HEINE_SERIES: _heine_series,
    **{identity: _cut_series(identity) for identity in CUT_SERIES},
    IdentityId.BOUNDARY_SERIES: _boundary_series,
}


def build_report(
    identity_id: IdentityId,
    params: IdentityParams,
    lhs: float | complex,
    rhs: float | complex,
    tol: float,
    *,
    converged: bool = True,
    diagnostics: dict[str, Any] | None = None,
) -> IdentityReport:
    """Compare two sides: pass iff converged and (abs_err <= tol or rel_err <= tol)."""
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / max(abs(lhs), abs(rhs), 1e-300)
    passed = converged and (abs_err <= tol or rel_err <= tol)

    def wire(value: float | complex) -> float | ComplexValue:
        return ComplexValue.of(value) if isinstance(value, complex) else float(value)

    return IdentityReport(
        identity_id=identity_id,
        params=params,
        lhs=wire(lhs),
        rhs=wire(rhs),
        abs_err=abs_err,
        rel_err=rel_err,
        tol=tol,
        passed=passed,
        diagnostics=diagnostics or {},
    )


def verify_identity(
    identity_id: IdentityId | str,
    params: IdentityParams,
    tol: float | None = None,
    *,
    settings: Settings | None = None,
) -> IdentityReport:
    """
    Check one identity at one parameter point.

    Args:
        identity_id: Which identity.
        params: Parameter point; each identity reads the subset it needs.
        tol: Report tolerance; defaults per identity class from settings.
        settings: Settings to use instead of the cached ones.

    Returns:
        IdentityReport; a left side that did not converge gives pass=false
        and its status in diagnostics.

    Raises:
        DomainError: Before any computation, if parameters are missing or
            outside the identity's domain.
    """
    identity_id = IdentityId(identity_id)
    settings = settings or get_settings()
    tol = default_tolerance(identity_id, settings) if tol is None else tol
    check_domain(identity_id, params, settings.DOMAIN_MARGIN)
    v = _values(params, identity_id)

    if identity_id is IdentityId.CLOSURE_ROUNDTRIP:
        from src.harness.closure import closure_roundtrip

        return closure_roundtrip(np.exp, v["lambda_"], v["n"], tol=tol)

    if identity_id in _QUADRATURE_CHECKS:
        qtol = min(settings.QUAD_TOL, 0.01 * tol)
        sides = _QUADRATURE_CHECKS[identity_id](v, qtol)
    else:
        sides = _SERIES_CHECKS[identity_id](v, tol)

    if not sides.converged:
        logger.warning(f"{identity_id} at {params.model_dump(by_alias=True, exclude_none=True)}: "
                       f"left side did not converge ({sides.diagnostics.get('lhs_status')})")
    report = build_report(
        identity_id,
        params,
        sides.lhs,
        sides.rhs,
        tol,
        converged=sides.converged,
        diagnostics=sides.diagnostics,
    )
    # complex checks pass only if both boundary branches do
    lower_err = sides.diagnostics.get("abs_err_lower")
    if lower_err is not None:
        if lower_err > report.abs_err:
            report.abs_err = lower_err
            report.rel_err = lower_err / max(abs(complex(report.lhs)), abs(complex(report.rhs)), 1e-300)  # type: ignore[arg-type]
            report.passed = sides.converged and (report.abs_err <= tol or report.rel_err <= tol)
    if not sides.coherent:
        logger.warning(f"{identity_id}: closed forms disagree by {sides.diagnostics['rhs_coherence']:.2e}")
        report.passed = False
    return report
