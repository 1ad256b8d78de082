"""
Singular integrals of renormalized Gegenbauer polynomials against
(1 - t^2)^(lambda - 1/2) and a power of the distance to a point.

    right:  int_x^1   (1-t^2)^(lambda-1/2) (t-x)^(-kappa-1/2) R_n(t) dt
    left:   int_-1^x  (1-t^2)^(lambda-1/2) (x-t)^(-kappa-1/2) R_n(t) dt
    offcut: int_-1^1  (1-t^2)^(lambda-1/2) (z-t)^(-kappa-1/2) R_n(t) dt

with R_n = ((n + lambda)/lambda) C_n^lambda. The on-cut integrals are split
at t = x so the interior singularity sits on an endpoint, where tanh-sinh
clusters its nodes; every singular factor is formed from the exact
endpoint distances.
"""

from dataclasses import replace

import numpy as np
from numpy.typing import NDArray

from src.core.errors import DomainError
from src.polynomials.gegenbauer import renorm_gegenbauer
from src.quadrature.tanh_sinh import QuadResult, tanh_sinh

Array = NDArray[np.float64]


def _check_common(n: int, lambda_: float) -> None:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if not lambda_ > -0.5:
        raise DomainError(f"lambda must be > -1/2, got {lambda_}")


def _check_on_cut(n: int, lambda_: float, kappa: float, x: float) -> None:
    _check_common(n, lambda_)
    if not kappa < 0.5:
        raise DomainError(f"kappa must be < 1/2, got {kappa}")
    if not -1.0 < x < 1.0:
        raise DomainError(f"x must lie in (-1, 1), got {x}")


def integral_right_lhs(
    n: int, lambda_: float, kappa: float, x: float, tol: float | None = None
) -> QuadResult:
    """((n+lambda)/lambda) int_x^1 (1-t^2)^(lambda-1/2) (t-x)^(-kappa-1/2) C_n^lambda(t) dt."""
    _check_on_cut(n, lambda_, kappa, x)

    def integrand(t: Array, to_x: Array, to_one: Array) -> Array:
        one_minus_t2 = to_one * (2.0 - to_one)
        return (
            one_minus_t2 ** (lambda_ - 0.5)
            * to_x ** (-kappa - 0.5)
            * renorm_gegenbauer(n, lambda_, t)
        )

    result = tanh_sinh(integrand, x, 1.0, tol, endpoint_distances=True)
    return replace(result, splits=(x,))


def integral_left_lhs(
    n: int, lambda_: float, kappa: float, x: float, tol: float | None = None
) -> QuadResult:
    """((n+lambda)/lambda) int_-1^x (1-t^2)^(lambda-1/2) (x-t)^(-kappa-1/2) C_n^lambda(t) dt."""
    _check_on_cut(n, lambda_, kappa, x)

    def integrand(t: Array, to_minus_one: Array, to_x: Array) -> Array:
        one_minus_t2 = to_minus_one * (2.0 - to_minus_one)
        return (
            one_minus_t2 ** (lambda_ - 0.5)
            * to_x ** (-kappa - 0.5)
            * renorm_gegenbauer(n, lambda_, t)
        )

    result = tanh_sinh(integrand, -1.0, x, tol, endpoint_distances=True)
    return replace(result, splits=(x,))


def integral_offcut_lhs(
    n: int, lambda_: float, kappa: float, z: float, tol: float | None = None
) -> QuadResult:
    """((n+lambda)/lambda) int_-1^1 (1-t^2)^(lambda-1/2) (z-t)^(-kappa-1/2) C_n^lambda(t) dt, z > 1."""
    _check_common(n, lambda_)
    if not z > 1.0:
        raise DomainError(f"z must be > 1, got {z}")

    def integrand(t: Array, to_minus_one: Array, to_one: Array) -> Array:
        return (
            (to_minus_one * to_one) ** (lambda_ - 0.5)
            * (z - t) ** (-kappa - 0.5)
            * renorm_gegenbauer(n, lambda_, t)
        )

    return tanh_sinh(integrand, -1.0, 1.0, tol, endpoint_distances=True)

