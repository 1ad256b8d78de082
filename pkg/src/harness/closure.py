"""
Closure round trip: expand a function in Gegenbauer polynomials and
synthesize it back on a grid.
"""

import logging
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.config import get_settings
from src.core.errors import DomainError
from src.harness.identities import build_report
from src.harness.schemas import IdentityId, IdentityParams, IdentityReport
from src.polynomials.gegenbauer import gegenbauer_coeffs, gegenbauer_synth

logger = logging.getLogger(__name__)

TestFunction = Callable[[NDArray[np.float64]], ArrayLike]

# interior points of a uniform 43-point grid on [-1, 1]
DEFAULT_GRID: tuple[float, ...] = tuple(float(v) for v in np.linspace(-1.0, 1.0, 43)[1:-1])


def _runge(t: NDArray[np.float64]) -> NDArray[np.float64]:
    return 1.0 / (1.0 + 25.0 * t * t)


def parse_function(text: str) -> TestFunction:
    """
    Turn a command-line function name into a vectorised callable.

    Accepted forms: "exp", "runge" (1/(1 + 25 t^2)) and "poly:c0,c1,..."
    for c0 + c1 t + ...

    Raises:
        DomainError: On an unknown name or malformed coefficient list.
    """
    name, _, rest = text.strip().partition(":")
    if name == "exp" and not rest:
        return np.exp
    if name == "runge" and not rest:
        return _runge
    if name == "poly":
        try:
            coeffs = [float(c) for c in rest.split(",") if c.strip()]
        except ValueError as e:
            raise DomainError(f"bad polynomial coefficients {rest!r}") from e
        if not coeffs:
            raise DomainError("poly: needs at least one coefficient")
        poly = np.polynomial.Polynomial(coeffs)
        return lambda t: poly(np.asarray(t, dtype=float))
    raise DomainError(f"unknown function {text!r}; expected exp, runge or poly:c0,c1,..")


def closure_roundtrip(
    f: TestFunction,
    lambda_: float,
    n_max: int,
    grid: Sequence[float] | None = None,
    tol: float | None = None,
) -> IdentityReport:
    """
    Expand f up to degree n_max and compare the synthesis with f on a grid.

    The report's lhs and rhs are f and its synthesis at the worst grid
    point, so abs_err is the maximum error over the grid.

    Raises:
        DomainError: If lambda <= -1/2, n_max < 0 or the grid leaves (-1, 1).
        ConvergenceError: If a coefficient integral does not converge.
    """
    tol = get_settings().CLOSED_FORM_TOL if tol is None else tol
    points = np.asarray(DEFAULT_GRID if grid is None else grid, dtype=float)
    if points.size == 0:
        raise DomainError("closure grid is empty")
    if np.any(np.abs(points) >= 1.0):
        raise DomainError("closure grid must lie in (-1, 1)")

    expansion = gegenbauer_coeffs(f, lambda_, n_max)
    exact = np.broadcast_to(np.asarray(f(points), dtype=float), points.shape)
    synthesized = np.asarray(gegenbauer_synth(expansion, points), dtype=float)
    worst = int(np.argmax(np.abs(exact - synthesized)))
    logger.debug(
        f"closure lambda={lambda_} N={n_max}: worst error at t={points[worst]:.4f}"
    )

    return build_report(
        IdentityId.CLOSURE_ROUNDTRIP,
        IdentityParams(n=n_max, lambda_=lambda_),
        float(exact[worst]),
        float(synthesized[worst]),
        tol,
        diagnostics={
            "worst_t": float(points[worst]),
            "grid_size": int(points.size),
            "basis": str(expansion.basis),
            "last_coeff": expansion.coeffs[-1],
        },
    )
