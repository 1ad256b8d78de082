"""
cutleg command-line interface.

Usage:
    cutleg eval gegenbauer --n 1 --lambda 1.5 --t 0.3
    cutleg verify eq1.3 --n 0 --z 2 --tol 1e-8
    cutleg sweep eq2.7 --grid n=0:5:6,lambda=0.25:2.5:3,kappa=-0.5:0.3:3,x=-0.7:0.7:3
    cutleg closure --fn exp --lambda 0.75 --N 20

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.
"""

import argparse
import logging
import shlex
import sys
import time
from collections.abc import Sequence
from importlib.metadata import PackageNotFoundError, version
from typing import Any

from src.cli.output import render_csv, render_json, render_value_csv
from src.core.config import activate_settings, load_settings
from src.core.errors import ConfigError, ConvergenceError, DomainError
from src.core.logging import setup_logging
from src.harness import (
    IdentityId,
    IdentityParams,
    IdentityReport,
    ReportDocument,
    RunSummary,
    closure_roundtrip,
    parse_function,
    parse_grid,
    run_sweep,
    verify_identity,
)
from src.harness.sweep import worst_rel_err
from src.kernels.types import EvalStatus
from src.legendre import ferrers_p, ferrers_q, offcut_q_phase_removed
from src.polynomials import gegenbauer_all, renorm_gegenbauer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FALLBACK_VERSION = "0.1.0"

# Global flags that override one settings field each (flag, field, type).
SETTINGS_FLAGS: tuple[tuple[str, str, type], ...] = (
    ("--quad-tol", "QUAD_TOL", float),
    ("--quadrature-identity-tol", "QUADRATURE_IDENTITY_TOL", float),
    ("--series-identity-tol", "SERIES_IDENTITY_TOL", float),
    ("--domain-margin", "DOMAIN_MARGIN", float),
    ("--series-exclusion", "SERIES_EXCLUSION", float),
    ("--abel-max-level", "ABEL_MAX_LEVEL", int),
    ("--nu-min", "NU_MIN", float),
    ("--nu-max", "NU_MAX", float),
    ("--mu-min", "MU_MIN", float),
    ("--mu-max", "MU_MAX", float),
    ("--x-max", "X_MAX", float),
    ("--z-min", "Z_MIN", float),
    ("--z-max", "Z_MAX", float),
)


def tool_version() -> str:
    try:
        return version("cutleg")
    except PackageNotFoundError:
        return FALLBACK_VERSION


def _identity_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int)
    parser.add_argument("--lambda", dest="lambda_", type=float)
    parser.add_argument("--kappa", type=float)
    parser.add_argument("--x", type=float)
    parser.add_argument("--t", type=float)
    parser.add_argument("--z", type=float)
    parser.add_argument("--tol", type=float, help="Report tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutleg",
        description="Gegenbauer/Legendre special functions and identity checks",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--config", help="key=value file overriding default settings")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--max-threads", type=int, default=None, help="Sweep workers")
    for flag, field, kind in SETTINGS_FLAGS:
        parser.add_argument(flag, dest=field, type=kind, default=None, help=f"Override {field}")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="Evaluate one special function")
    functions = evaluate.add_subparsers(dest="function", required=True)
    for name in ("gegenbauer", "renorm-gegenbauer"):
        sub = functions.add_parser(name)
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--lambda", dest="lambda_", type=float, required=True)
        sub.add_argument("--t", type=float, required=True)
    for name in ("ferrers-p", "ferrers-q"):
        sub = functions.add_parser(name)
        sub.add_argument("--nu", type=float, required=True)
        sub.add_argument("--mu", type=float, required=True)
        sub.add_argument("--x", type=float, required=True)
    sub = functions.add_parser("offcut-q")
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--mu", type=float, required=True)
    sub.add_argument("--z", type=float, required=True)

    verify = commands.add_parser("verify", help="Check one identity at one point")
    verify.add_argument("identity_id", choices=[str(i) for i in IdentityId])
    _identity_flags(verify)

    sweep = commands.add_parser("sweep", help="Check one identity over a grid")
    sweep.add_argument("identity_id", choices=[str(i) for i in IdentityId])
    sweep.add_argument(
        "--grid", required=True, help="param=start:stop:count[,param=value,...]"
    )
    sweep.add_argument("--tol", type=float, help="Report tolerance")

    closure = commands.add_parser("closure", help="Expand and resynthesize a function")
    closure.add_argument("--fn", required=True, help="poly:c0,c1,.. | exp | runge")
    closure.add_argument("--lambda", dest="lambda_", type=float, required=True)
    closure.add_argument("--N", dest="n_max", type=int, required=True)
    closure.add_argument("--tol", type=float, help="Report tolerance")
    return parser


def _settings_overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Flags win over the config file; unset flags leave it alone."""
    overrides: dict[str, Any] = {"MAX_THREADS": args.max_threads}
    for _, field, _ in SETTINGS_FLAGS:
        overrides[field] = getattr(args, field)
    return overrides


def _evaluate(args: argparse.Namespace) -> tuple[dict[str, Any], bool]:
    if args.function == "gegenbauer":
        value = float(gegenbauer_all(args.n, args.lambda_, args.t)[args.n])
        return {"value": value}, True
    if args.function == "renorm-gegenbauer":
        return {"value": float(renorm_gegenbauer(args.n, args.lambda_, args.t))}, True
    if args.function == "offcut-q":
        result = offcut_q_phase_removed(args.nu, args.mu, args.z)
        return {"value": result.value, "status": str(result.status)}, result.ok

    evaluator = ferrers_p if args.function == "ferrers-p" else ferrers_q
    fv = evaluator(args.nu, args.mu, args.x)
    payload = {
        "value": fv.value,
        "method": str(fv.method),
        "est_accuracy": fv.est_accuracy,
        "status": str(fv.status),
    }
    return payload, fv.status is EvalStatus.OK


def _reports(args: argparse.Namespace) -> tuple[list[IdentityReport], int]:
    """Run the requested checks; also return how many grid points were skipped."""
    if args.command == "verify":
        params = IdentityParams(
            n=args.n, lambda_=args.lambda_, kappa=args.kappa, x=args.x, t=args.t, z=args.z
        )
        return [verify_identity(args.identity_id, params, args.tol)], 0
    if args.command == "closure":
        f = parse_function(args.fn)
        return [closure_roundtrip(f, args.lambda_, args.n_max, tol=args.tol)], 0
    reports, summary = run_sweep(
        args.identity_id, parse_grid(args.grid), args.tol, max_workers=args.max_threads
    )
    logger.info(
        f"sweep {args.identity_id}: {summary.passed}/{summary.total} passed, "
        f"{summary.skipped} skipped, worst rel_err {summary.worst_rel_err:.3e}"
    )
    return reports, summary.skipped


def run_command(argv: Sequence[str] | None = None) -> int:
    """
    Run one cutleg invocation and write its document to stdout.

    Returns:
        0 when every check passes (or the evaluation succeeded), 1 when a
        check fails, 2 on usage, configuration or domain errors.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    try:
        settings = load_settings(args.config, _settings_overrides(args))
    except ConfigError as e:
        print(f"cutleg: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(args.log_level or settings.LOG_LEVEL, settings.DEBUG)
    activate_settings(settings)

    started = time.perf_counter()
    try:
        if args.command == "eval":
            payload, ok = _evaluate(args)
            output = render_value_csv(payload) if args.format == "csv" else render_json(payload)
            sys.stdout.write(output if output.endswith("\n") else output + "\n")
            return EXIT_OK if ok else EXIT_FAILED
        reports, skipped = _reports(args)
    except DomainError as e:
        print(f"cutleg: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as e:
        print(f"cutleg: {e}", file=sys.stderr)
        return EXIT_FAILED
    finally:
        activate_settings(None)

    elapsed_ms = (time.perf_counter() - started) * 1000.0
    passed = sum(report.passed for report in reports)
    if args.format == "csv":
        sys.stdout.write(render_csv(reports))
    else:
        document = ReportDocument(
            tool_version=tool_version(),
            command=shlex.join(argv),
            reports=reports,
            summary=RunSummary(
                total=len(reports),
                passed=passed,
                skipped=skipped,
                worst_rel_err=worst_rel_err(reports),
                wall_time_ms=elapsed_ms,
            ),
        )
        sys.stdout.write(render_json(document) + "\n")
    return EXIT_OK if passed == len(reports) else EXIT_FAILED


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
