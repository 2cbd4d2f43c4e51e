"""``qccd-router`` command-line entry point.

Usage::

    qccd-router route --config runs/qft16.toml --out-dir out/qft16
    qccd-router sweep --config runs/qft8-sweep.toml
    qccd-router bench --circuits qft,qaoa,ca,da,rnd10,rnd80 --qubits 40
    qccd-router validate out/qft16/trace.json
    qccd-router compare --config runs/ca16.toml --topologies linear:8x3,ring:8x3,grid:2x4x3
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from qccd_router.cli import commands
from qccd_router.config.env import DEFAULT_OUT_DIR, DEFAULT_SEED
from qccd_router.config.run_config import RunConfig, load_run_config
from qccd_router.data.benchmarks import Benchmark
from qccd_router.data.errors import (
    CapacityError,
    CircuitParseError,
    ConfigError,
    InvalidArgumentError,
    QccdRouterError,
    RoutingError,
    ShuttleInvariantError,
    TraceValidationError,
)
from qccd_router.data.exit_codes import ExitCodes
from qccd_router.utils.log_utils import configure_logging, get_logger

logger = get_logger(__name__)

# First match wins; subclasses come before their bases.
_EXIT_CODES: tuple[tuple[type[BaseException], ExitCodes], ...] = (
    (ConfigError, ExitCodes.CONFIG),
    (CircuitParseError, ExitCodes.PARSE),
    (CapacityError, ExitCodes.CAPACITY),
    (TraceValidationError, ExitCodes.VALIDATION),
    (RoutingError, ExitCodes.ROUTING),
    (ShuttleInvariantError, ExitCodes.ROUTING),
    (InvalidArgumentError, ExitCodes.USAGE),
    (QccdRouterError, ExitCodes.USAGE),
    (OSError, ExitCodes.IO),
)


def exit_code_for(exc: BaseException) -> ExitCodes:
    for error_type, code in _EXIT_CODES:
        if isinstance(exc, error_type):
            return code
    raise exc


def _comma_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qccd-router",
        description="Parallelism-aware qubit routing for trapped-ion QCCD machines.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Logging level (defaults to the QCCD_LOG_LEVEL env-var or WARNING).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_overrides(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--seed", type=int, default=None, help="Override the seed recorded in every artifact.")
        p.add_argument("--out-dir", type=Path, default=None, help="Override the output directory.")
        return p

    route = with_overrides(sub.add_parser("route", help="Route one circuit and write trace, metrics and summary."))
    route.add_argument("--config", type=Path, required=True, help="Run config (TOML) with a [weights] section.")

    sweep = with_overrides(sub.add_parser("sweep", help="Run the staged weight sweep."))
    sweep.add_argument("--config", type=Path, required=True, help="Run config (TOML) with a [sweep] section.")
    sweep.add_argument("--workers", type=int, default=None, help="Process-pool size (defaults to QCCD_SWEEP_WORKERS).")

    bench = with_overrides(sub.add_parser("bench", help="Write structure statistics of generated benchmarks."))
    bench.add_argument(
        "--circuits",
        type=_comma_list,
        default=[str(b) for b in Benchmark],
        help=f"Comma-separated benchmark names from {', '.join(Benchmark)}.",
    )
    bench.add_argument("--qubits", type=int, default=40, help="Number of qubits per benchmark.")

    validate = sub.add_parser("validate", help="Replay a trace and check every invariant.")
    validate.add_argument("trace", type=Path, help="Path to trace.json.")

    compare = with_overrides(sub.add_parser("compare", help="Compare topologies in parallel and ablation mode."))
    compare.add_argument("--config", type=Path, required=True, help="Run config (TOML) with a [weights] section.")
    compare.add_argument(
        "--topologies",
        type=_comma_list,
        required=True,
        help="Comma-separated topologies, e.g. linear:8x6,ring:8x6,grid:2x4x6.",
    )
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return load_run_config(args.config).with_overrides(seed=args.seed, out_dir=args.out_dir)


def _dispatch(args: argparse.Namespace) -> None:
    match args.command:
        case "route":
            metrics = commands.cmd_route(_run_config(args), args.config.parent).metrics
            print(
                f"routed: {metrics.shuttle_count} shuttles, {metrics.swap_count} swaps, "
                f"fidelity {metrics.total_fidelity:.6f}"
            )
        case "sweep":
            result = commands.cmd_sweep(_run_config(args), args.config.parent, args.workers)
            print(f"sweep: {len(result.evaluations)} evaluations, best fidelity {result.best.fidelity:.6f}")
        case "bench":
            out_dir = args.out_dir if args.out_dir is not None else Path(DEFAULT_OUT_DIR)
            seed = args.seed if args.seed is not None else DEFAULT_SEED
            path = commands.cmd_bench(args.circuits, args.qubits, out_dir, seed)
            print(f"bench: wrote {path}")
        case "validate":
            trace = commands.cmd_validate(args.trace)
            print(f"valid: {len(trace.rounds)} rounds, {len(trace.gates)} gates")
        case "compare":
            path = commands.cmd_compare(_run_config(args), args.topologies, args.config.parent)
            print(f"compare: wrote {path}")


def main(argv: Sequence[str] | None = None) -> int:
    """Parse *argv*, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else int(ExitCodes.USAGE)

    configure_logging(args.log_level)
    logger.info("running '%s'", args.command)
    try:
        _dispatch(args)
    except (QccdRouterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(exit_code_for(exc))
    return int(ExitCodes.OK)


if __name__ == "__main__":
    sys.exit(main())
