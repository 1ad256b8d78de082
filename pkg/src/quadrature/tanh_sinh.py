"""
Tanh-sinh (double exponential) quadrature on a finite interval.

The substitution x = c + d tanh(pi/2 sinh s) clusters nodes double
exponentially towards both endpoints, so algebraic endpoint singularities
with exponent > -1 are integrated without special treatment. Each level
halves the step h = 2^-k and only evaluates the new (odd) nodes.

Node tables are computed once per level and cached as read-only arrays.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.config import get_settings
from src.core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

S_MAX = 6.0
MIN_CONVERGED_LEVEL = 3

Integrand = Callable[..., ArrayLike]


class QuadStatus(StrEnum):
    OK = "ok"
    NOT_CONVERGED = "not-converged"
    NAN_DETECTED = "nan-detected"


@dataclass(frozen=True)
class QuadResult:
    """Value and error estimate of one tanh-sinh integration."""

    value: float
    err_est: float
    evals: int
    status: QuadStatus = QuadStatus.OK
    splits: tuple[float, ...] = ()
    levels: int = 0
    level_errors: tuple[float, ...] = field(default=(), repr=False)

    @property
    def ok(self) -> bool:
        return self.status is QuadStatus.OK

    def raise_for_status(self) -> "QuadResult":
        if not self.ok:
            raise ConvergenceError(
                f"tanh-sinh {self.status}: value={self.value}, err_est={self.err_est}"
            )
        return self


@dataclass(frozen=True)
class _LevelNodes:
    # for the nodes s > 0 of one level: 1 - tanh(u) and the weight factor
    comp: NDArray[np.float64]
    weight: NDArray[np.float64]


@lru_cache(maxsize=None)
def _level_nodes(level: int) -> _LevelNodes:
    h = 2.0**-level
    if level == 0:
        s = np.arange(1.0, S_MAX + 0.5)
    else:
        count = int(S_MAX * 2 ** (level - 1))
        s = (2.0 * np.arange(count) + 1.0) * h
    u = 0.5 * np.pi * np.sinh(s)
    # 1 - tanh(u) = 2 / (exp(2u) + 1) without cancellation
    e = np.exp(-2.0 * u)
    comp = 2.0 * e / (1.0 + e)
    weight = 0.5 * np.pi * np.cosh(s) * comp * (2.0 - comp)
    for arr in (comp, weight):
        arr.setflags(write=False)
    return _LevelNodes(comp=comp, weight=weight)


def _level_sum(
    f: Integrand,
    a: float,
    b: float,
    level: int,
    endpoint_distances: bool,
) -> tuple[float, int, bool]:
    """Weighted sum of f over the new nodes of a level (without the h factor)."""
    c = 0.5 * (a + b)
    d = 0.5 * (b - a)
    nodes = _level_nodes(level)

    near = d * nodes.comp
    far = d * (2.0 - nodes.comp)
    x = np.concatenate([b - near, a + near])
    to_a = np.concatenate([far, near])
    to_b = np.concatenate([near, far])
    w = np.concatenate([nodes.weight, nodes.weight])
    if level == 0:
        x = np.concatenate([[c], x])
        to_a = np.concatenate([[d], to_a])
        to_b = np.concatenate([[d], to_b])
        w = np.concatenate([[0.5 * np.pi], w])

    # drop nodes that round onto an endpoint or carry no weight
    keep = (to_a > 0.0) & (to_b > 0.0) & (w > 0.0)
    if not endpoint_distances:
        keep &= (x > a) & (x < b)
    x, to_a, to_b, w = x[keep], to_a[keep], to_b[keep], w[keep]

    if endpoint_distances:
        values = np.asarray(f(x, to_a, to_b), dtype=float)
    else:
        values = np.asarray(f(x), dtype=float)
    values = np.broadcast_to(values, x.shape)
    if not np.all(np.isfinite(values)):
        return math.nan, int(x.size), False
    return float(d * np.dot(w, values)), int(x.size), True


def tanh_sinh(
    f: Integrand,
    a: float,
    b: float,
    tol: float | None = None,
    *,
    endpoint_distances: bool = False,
    max_level: int | None = None,
) -> QuadResult:
    """
    Integrate f over (a, b) by tanh-sinh quadrature.

    Args:
        f: Vectorised integrand. Called as f(t) or, with endpoint_distances,
            as f(t, t - a, b - t) where both distances are accurate even when
            t rounds onto an endpoint.
        a, b: Finite limits with a < b.
        tol: Target for |I_k - I_{k-1}| relative to max(1, |I_k|);
            defaults to settings.QUAD_TOL.
        endpoint_distances: Pass endpoint distances to f.
        max_level: Deepest level (step 2^-max_level); defaults to settings.

    Returns:
        QuadResult; status 'not-converged' if max_level is reached,
        'nan-detected' if f returned a non-finite value.

    Raises:
        DomainError: If the limits are not finite or a >= b.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"tanh_sinh needs finite a < b, got a={a}, b={b}")
    settings = get_settings()
    tol = settings.QUAD_TOL if tol is None else tol
    max_level = settings.QUAD_MAX_LEVEL if max_level is None else max_level

    total, evals, finite = _level_sum(f, a, b, 0, endpoint_distances)
    if not finite:
        return QuadResult(math.nan, math.inf, evals, QuadStatus.NAN_DETECTED)
    estimate = total
    errors: list[float] = []

    for level in range(1, max_level + 1):
        new, count, finite = _level_sum(f, a, b, level, endpoint_distances)
        evals += count
        if not finite:
            logger.debug(f"tanh-sinh on ({a}, {b}): non-finite integrand at level {level}")
            return QuadResult(
                math.nan, math.inf, evals, QuadStatus.NAN_DETECTED,
                levels=level, level_errors=tuple(errors),
            )
        previous = estimate
        estimate = 0.5 * previous + 2.0**-level * new
        err = abs(estimate - previous)
        errors.append(err)
        if level >= MIN_CONVERGED_LEVEL and err <= tol * max(1.0, abs(estimate)):
            return QuadResult(
                estimate, err, evals, QuadStatus.OK,
                levels=level, level_errors=tuple(errors),
            )

    logger.debug(f"tanh-sinh on ({a}, {b}) not converged: err={errors[-1]:.3e}, tol={tol:.1e}")
    return QuadResult(
        estimate, errors[-1], evals, QuadStatus.NOT_CONVERGED,
        levels=max_level, level_errors=tuple(errors),
    )
