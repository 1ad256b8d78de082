"""
Run the acceptance grids and print one PASS/FAIL line per check.

Covers the Neumann, off-cut integral, on-cut integral, series, Heine and
closure grids plus the elementary antiderivative, P and Q reflection,
Wronskian and split-integral checks. Exits 1 if any check fails.

Usage:
    python scripts/run_acceptance.py
    CUTLEG_MAX_THREADS=4 python scripts/run_acceptance.py --only eq2.7
"""

import argparse
import math
import os
import sys
import time
from collections.abc import Callable

import numpy as np

# Add project root to path so we can import our modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.logging import setup_logging
from src.harness import closure_roundtrip, run_sweep
from src.harness.identities import combination_rhs, left_integral_cot_rhs, left_integral_rhs
from src.legendre import ferrers_p, ferrers_q
from src.quadrature.integrals import integral_left_lhs, integral_right_lhs

# ---------------------------------------------------------------------------
# Sweep grids
# ---------------------------------------------------------------------------
# Each entry: (identity id, grid, report tolerance)

SERIES_GRID = {
    "lambda": [0.5, 1.25],
    "kappa": [-0.5, 0.0],
    "x": [-0.6, -0.1, 0.4, 0.8],
    "t": [-0.6, -0.1, 0.4, 0.8],
}
ON_CUT_GRID = {
    "n": list(range(7)),
    "lambda": [0.25, 0.75, 2.0],
    "kappa": [-0.75, 0.0, 0.35],
    "x": [-0.7, -0.2, 0.3, 0.8],
}

DEFAULT_SWEEPS = [
    ("eq1.3", {"n": list(range(11)), "z": [1.1, 1.5, 2.0, 5.0]}, 1e-8),
    (
        "eq1.1",
        {
            "n": list(range(7)),
            "lambda": [0.1, 0.5, 1.5, 3.0],
            "kappa": [-1.0, 0.0, 0.5, 1.2],
            "z": [1.2, 2.0, 10.0],
        },
        1e-7,
    ),
    ("eq1.2", {"n": list(range(7)), "lambda": [0.1, 0.5, 1.5, 3.0], "z": [1.2, 2.0, 10.0]}, 1e-7),
    ("eq2.7", ON_CUT_GRID, 1e-7),
    ("eq2.10", ON_CUT_GRID, 1e-7),
    ("eq2.8", ON_CUT_GRID, 1e-7),
    ("eq3.2", SERIES_GRID, 1e-3),
    ("eq3.3", SERIES_GRID, 1e-3),
    ("eq3.4", SERIES_GRID, 1e-3),
    ("eq3.5", SERIES_GRID, 1e-3),
    ("eq3.1-boundary", SERIES_GRID, 1e-3),
    ("eq1.6", {"z": [1.5, 2.0, 4.0], "t": [-0.5, 0.0, 0.5]}, 1e-9),
]


def check_elementary(rng: np.random.Generator) -> bool:
    xs = rng.uniform(-0.95, 0.95, 20)
    return all(
        abs(integral_right_lhs(0, 0.5, 0.0, x).value - 2.0 * math.sqrt(1.0 - x)) <= 1e-9
        and abs(integral_left_lhs(0, 0.5, 0.0, x).value - 2.0 * math.sqrt(1.0 + x)) <= 1e-9
        for x in xs
    )


def check_q_reflection(rng: np.random.Generator) -> bool:
    # Q(x) = -cos(pi(nu+mu)) Q(-x) - (pi/2) sin(pi(nu+mu)) P(-x)
    for _ in range(500):
        nu = rng.uniform(-0.4, 10.0)
        mu = rng.uniform(-5.0, 0.9)
        x = rng.uniform(-0.95, 0.95)
        s = nu + mu
        lhs = ferrers_q(nu, mu, x, reflect=False).value
        q_minus = ferrers_q(nu, mu, -x, reflect=False).value
        p_minus = ferrers_p(nu, mu, -x, reflect=False).value
        rhs = -math.cos(math.pi * s) * q_minus - 0.5 * math.pi * math.sin(math.pi * s) * p_minus
        if abs(lhs - rhs) > 1e-9 * max(1.0, abs(lhs), abs(q_minus), abs(p_minus)):
            return False
    return True


def _off_lattice(v: float, gap: float) -> bool:
    return abs(v - round(v)) > gap


def check_p_reflection(rng: np.random.Generator) -> bool:
    # P(x) = cos(pi(nu+mu)) P(-x) - (2/pi) sin(pi(nu+mu)) Q(-x)
    import mpmath

    checked = 0
    while checked < 500:
        nu = rng.uniform(-0.4, 10.0)
        mu = rng.uniform(-5.0, 0.9)
        x = rng.uniform(-0.95, 0.95)
        s = nu + mu
        if checked % 10 == 0:
            # nu + mu + 1 on a nonpositive integer, where Q(-x) has a pole
            mu = -nu - 1.0 - float(rng.integers(0, 3))
            x = -abs(x)
            expected = float(mpmath.legenp(nu, mu, x, type=2))
            got = ferrers_p(nu, mu, x).value
            if abs(got - expected) > 1e-9 * max(1.0, abs(expected)):
                return False
            checked += 1
            continue
        if not (_off_lattice(mu, 1e-3) and (s + 1.0 > 1e-3 or _off_lattice(s, 1e-3))):
            continue
        lhs = ferrers_p(nu, mu, x, reflect=False).value
        p_minus = ferrers_p(nu, mu, -x, reflect=False).value
        q_minus = ferrers_q(nu, mu, -x, reflect=False).value
        rhs = math.cos(math.pi * s) * p_minus - 2.0 / math.pi * math.sin(math.pi * s) * q_minus
        if abs(lhs - rhs) > 1e-9 * max(1.0, abs(lhs), abs(p_minus), abs(q_minus)):
            return False
        checked += 1
    return True


def check_wronskian(rng: np.random.Generator) -> bool:
    # (1 - x^2)(P Q' - P' Q) = Gamma(nu+mu+1) / Gamma(nu-mu+1), derivatives by central differences
    h = 1e-4
    checked = 0
    while checked < 200:
        nu = rng.uniform(-0.4, 4.0)
        mu = rng.uniform(-3.0, 0.9)
        x = rng.uniform(-0.8, 0.8)
        if not (
            _off_lattice(mu, 0.05)
            and (nu + mu + 1.0 > 0.05 or _off_lattice(nu + mu, 0.05))
            and (nu - mu + 1.0 > 0.05 or _off_lattice(nu - mu, 0.05))
        ):
            continue
        p = [ferrers_p(nu, mu, at).value for at in (x - h, x, x + h)]
        q = [ferrers_q(nu, mu, at).value for at in (x - h, x, x + h)]
        dp = (p[2] - p[0]) / (2.0 * h)
        dq = (q[2] - q[0]) / (2.0 * h)
        weight = 1.0 - x * x
        lhs = weight * (p[1] * dq - dp * q[1])
        expected = math.gamma(nu + mu + 1.0) / math.gamma(nu - mu + 1.0)
        scale = max(1.0, abs(expected), weight * abs(p[1] * dq), weight * abs(dp * q[1]))
        if abs(lhs - expected) > 1e-6 * scale:
            return False
        checked += 1
    return True


def check_split(rng: np.random.Generator) -> bool:
    for _ in range(100):
        n = int(rng.integers(0, 6))
        lam = rng.uniform(0.1, 2.0)
        kappa = rng.uniform(-0.9, 0.4)
        x = rng.uniform(-0.8, 0.8)
        left = integral_left_lhs(n, lam, kappa, x, 1e-11).value
        right = integral_right_lhs(n, lam, kappa, x, 1e-11).value
        upper, _ = combination_rhs(n, lam, kappa, x)
        lhs = left + complex(math.cos(math.pi * (kappa + 0.5)), -math.sin(math.pi * (kappa + 0.5))) * right
        if abs(lhs - upper) > 1e-7 * max(1.0, abs(upper)):
            return False
        cot_form, _ = left_integral_cot_rhs(n, lam, kappa, x)
        simple = left_integral_rhs(n, lam, kappa, x)
        if abs(cot_form - simple) > 1e-10 * max(1.0, abs(simple)):
            return False
    return True


def check_closure() -> bool:
    return all(
        closure_roundtrip(f, lam, n_max, tol=1e-10).passed
        for lam in (0.5, 1.0, 2.5)
        for f, n_max in ((np.exp, 20), (lambda t: 1.0 - 2.0 * t + 3.0 * t**3, 3))
    )


def _timed(label: str, check: Callable[[], tuple[bool, str]]) -> bool:
    started = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - started
    print(f"{'PASS' if ok else 'FAIL'}  {label:<16} {detail}  ({elapsed:.1f} s)")
    return ok


def main() -> None:
    parser = argparse.ArgumentParser(description="Run the acceptance grids")
    parser.add_argument("--only", help="Run a single identity sweep by id")
    parser.add_argument("--seed", type=int, default=20240601, help="Random sample seed")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()
    setup_logging(args.log_level)
    rng = np.random.default_rng(args.seed)

    results: list[bool] = []
    for identity_id, grid, tol in DEFAULT_SWEEPS:
        if args.only and identity_id != args.only:
            continue

        def run(identity_id: str = identity_id, grid: dict = grid, tol: float = tol) -> tuple[bool, str]:
            _, summary = run_sweep(identity_id, grid, tol)
            detail = (
                f"{summary.passed}/{summary.total} passed, {summary.skipped} skipped, "
                f"worst rel_err {summary.worst_rel_err:.2e}"
            )
            return summary.failed == 0, detail

        results.append(_timed(identity_id, run))

    if not args.only:
        results.append(_timed("elementary", lambda: (check_elementary(rng), "20 random x")))
        results.append(_timed("q-reflection", lambda: (check_q_reflection(rng), "500 triples")))
        results.append(_timed("p-reflection", lambda: (check_p_reflection(rng), "500 triples")))
        results.append(_timed("wronskian", lambda: (check_wronskian(rng), "200 triples")))
        results.append(_timed("split", lambda: (check_split(rng), "100 tuples")))
        results.append(_timed("closure", lambda: (check_closure(), "lambda 0.5, 1, 2.5")))

    print(f"\n{sum(results)}/{len(results)} checks passed")
    sys.exit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
