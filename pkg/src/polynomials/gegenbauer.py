"""
Gegenbauer polynomials C_n^lambda(t), their renormalized form
R_n^lambda(t) = ((n + lambda) / lambda) C_n^lambda(t), and expansion /
synthesis against the weight (1 - t^2)^(lambda - 1/2).

The renormalized family has a finite limit at lambda = 0 (R_0 = 1,
R_n = 2 T_n), which is the only way lambda = 0 enters this package.
Every evaluator accepts a scalar t or a numpy array of abscissas.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.errors import DomainError
from src.kernels.gamma import gamma_ratio
from src.quadrature.tanh_sinh import QuadStatus, tanh_sinh

logger = logging.getLogger(__name__)

COEFF_QUAD_TOL = 1e-13


class ExpansionBasis(StrEnum):
    PLAIN = "plain"
    RENORMALIZED = "renormalized"


@dataclass(frozen=True)
class ExpansionCoeffs:
    """Coefficients c_0..c_N of an expansion in Gegenbauer polynomials."""

    lambda_: float
    coeffs: tuple[float, ...]
    basis: ExpansionBasis = ExpansionBasis.PLAIN

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("an expansion needs at least one coefficient")
        if not all(math.isfinite(c) for c in self.coeffs):
            raise DomainError("expansion coefficients must be finite")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _check_lambda(lam: float) -> None:
    if not lam > -0.5:
        raise DomainError(f"lambda must be > -1/2, got {lam}")


def _check_t(t: NDArray[np.float64]) -> None:
    if np.any(np.abs(t) > 1.0):
        raise DomainError("t must lie in [-1, 1]")


def _gegenbauer_rows(n_max: int, lam: float, t: NDArray[np.float64]) -> NDArray[np.float64]:
    rows = np.empty((n_max + 1,) + t.shape)
    rows[0] = 1.0
    if n_max >= 1:
        rows[1] = 2.0 * lam * t
    for n in range(2, n_max + 1):
        rows[n] = (2.0 * t * (n + lam - 1.0) * rows[n - 1] - (n + 2.0 * lam - 2.0) * rows[n - 2]) / n
    return rows


def _renormalized_rows(n_max: int, lam: float, t: NDArray[np.float64]) -> NDArray[np.float64]:
    # D_n = C_n / lambda for n >= 1 obeys the same recurrence from n = 3 on
    # and stays finite at lambda = 0
    if t.ndim == 0:
        return _renormalized_scalar(n_max, lam, float(t))
    rows = np.empty((n_max + 1,) + t.shape)
    rows[0] = 1.0
    if n_max == 0:
        return rows
    d_prev2 = 2.0 * t
    rows[1] = (1.0 + lam) * d_prev2
    if n_max == 1:
        return rows
    d_prev1 = 2.0 * (1.0 + lam) * t * t - 1.0
    rows[2] = (2.0 + lam) * d_prev1
    for n in range(3, n_max + 1):
        d_n = (2.0 * t * (n + lam - 1.0) * d_prev1 - (n + 2.0 * lam - 2.0) * d_prev2) / n
        rows[n] = (n + lam) * d_n
        d_prev2, d_prev1 = d_prev1, d_n
    return rows


def _renormalized_scalar(n_max: int, lam: float, t: float) -> NDArray[np.float64]:
    # long single-abscissa runs (series terms) stay in plain floats
    values = [1.0]
    if n_max >= 1:
        d_prev2 = 2.0 * t
        values.append((1.0 + lam) * d_prev2)
    if n_max >= 2:
        d_prev1 = 2.0 * (1.0 + lam) * t * t - 1.0
        values.append((2.0 + lam) * d_prev1)
        for n in range(3, n_max + 1):
            d_n = (2.0 * t * (n + lam - 1.0) * d_prev1 - (n + 2.0 * lam - 2.0) * d_prev2) / n
            values.append((n + lam) * d_n)
            d_prev2, d_prev1 = d_prev1, d_n
    return np.array(values)


def gegenbauer_all(n_max: int, lambda_: float, t: ArrayLike) -> NDArray[np.float64]:
    """
    C_0^lambda(t)..C_{n_max}^lambda(t) by the forward three-term recurrence.

    Returns an array whose first axis is the degree; trailing axes follow t.

    Raises:
        DomainError: If lambda <= -1/2, lambda == 0 or |t| > 1.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    _check_lambda(lambda_)
    if lambda_ == 0.0:
        raise DomainError("C_n^0 vanishes identically; use renorm_gegenbauer for lambda = 0")
    tt = np.asarray(t, dtype=float)
    _check_t(tt)
    return _gegenbauer_rows(n_max, lambda_, tt)


def renorm_gegenbauer_all(n_max: int, lambda_: float, t: ArrayLike) -> NDArray[np.float64]:
    """R_0..R_{n_max} with R_n = ((n + lambda) / lambda) C_n^lambda, lambda = 0 allowed."""
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    _check_lambda(lambda_)
    tt = np.asarray(t, dtype=float)
    _check_t(tt)
    return _renormalized_rows(n_max, lambda_, tt)


def renorm_gegenbauer(n: int, lambda_: float, t: ArrayLike) -> NDArray[np.float64] | float:
    """((n + lambda) / lambda) C_n^lambda(t); 1 for n = 0 and 2 T_n(t) at lambda = 0."""
    rows = renorm_gegenbauer_all(n, lambda_, t)
    last = rows[n]
    return float(last) if last.ndim == 0 else last


def _inverse_norm(n: int, lam: float) -> float:
    """2^(2 lambda - 1) Gamma(lambda)^2 n! (n + lambda) / (pi Gamma(n + 2 lambda))."""
    ratio = gamma_ratio([lam, lam, n + 1.0], [n + 2.0 * lam])
    return 2.0 ** (2.0 * lam - 1.0) * ratio.value * (n + lam) / math.pi


def gegenbauer_coeffs(
    f: Callable[[NDArray[np.float64]], ArrayLike],
    lambda_: float,
    n_max: int,
    tol: float = COEFF_QUAD_TOL,
) -> ExpansionCoeffs:
    """
    Project f onto C_0^lambda..C_N^lambda with weight (1 - t^2)^(lambda - 1/2).

    For lambda = 0 the projection is onto R_0 = 1, R_n = 2 T_n (Chebyshev
    orthogonality), so that synthesis d_0 + sum d_n R_n reproduces f.

    Args:
        f: Vectorised function of t on (-1, 1).
        lambda_: Gegenbauer parameter, > -1/2.
        n_max: Highest degree N.
        tol: Quadrature tolerance per coefficient.

    Raises:
        DomainError: If lambda <= -1/2 or n_max < 0.
        ConvergenceError: If a coefficient integral does not converge.
    """
    _check_lambda(lambda_)
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")

    renormalized = lambda_ == 0.0
    coeffs: list[float] = []
    for n in range(n_max + 1):

        def integrand(
            t: NDArray[np.float64],
            da: NDArray[np.float64],
            db: NDArray[np.float64],
            n: int = n,
        ) -> NDArray[np.float64]:
            weight = (da * db) ** (lambda_ - 0.5)
            if renormalized:
                poly = np.cos(n * np.arccos(t))
            else:
                poly = _gegenbauer_rows(n, lambda_, t)[n]
            return weight * poly * np.asarray(f(t), dtype=float)

        result = tanh_sinh(integrand, -1.0, 1.0, tol, endpoint_distances=True)
        if result.status is not QuadStatus.OK:
            logger.warning(f"coefficient {n} (lambda={lambda_}): quadrature {result.status}")
        result.raise_for_status()
        scale = 1.0 / math.pi if renormalized else _inverse_norm(n, lambda_)
        coeffs.append(scale * result.value)

    basis = ExpansionBasis.RENORMALIZED if renormalized else ExpansionBasis.PLAIN
    return ExpansionCoeffs(lambda_=lambda_, coeffs=tuple(coeffs), basis=basis)


def gegenbauer_synth(expansion: ExpansionCoeffs, t: ArrayLike) -> NDArray[np.float64] | float:
    """
    Sum the expansion at t by Clenshaw's backward recurrence.

    Plain basis: C_{n+1} = alpha_n C_n + beta_n C_{n-1} with
    alpha_n = 2t(n + lambda)/(n + 1), beta_n = -(n + 2 lambda - 1)/(n + 1).
    Renormalized basis at lambda = 0: Chebyshev Clenshaw on d_0 + 2 sum d_n T_n.
    """
    tt = np.asarray(t, dtype=float)
    _check_t(tt)
    c = expansion.coeffs
    lam = expansion.lambda_
    big_n = expansion.degree

    if expansion.basis is ExpansionBasis.RENORMALIZED:
        b1 = np.zeros_like(tt)
        b2 = np.zeros_like(tt)
        for k in range(big_n, 0, -1):
            b1, b2 = 2.0 * c[k] + 2.0 * tt * b1 - b2, b1
        out = c[0] + tt * b1 - b2
    else:
        b1 = np.zeros_like(tt)
        b2 = np.zeros_like(tt)
        for k in range(big_n, 0, -1):
            alpha = 2.0 * tt * (k + lam) / (k + 1.0)
            beta_next = -(k + 2.0 * lam) / (k + 2.0)
            b1, b2 = c[k] + alpha * b1 + beta_next * b2, b1
        # S = c_0 C_0 + b_1 C_1 + beta_1 C_0 b_2
        out = c[0] + b1 * 2.0 * lam * tt - lam * b2

    return float(out) if out.ndim == 0 else out
