"""``depthkit`` command line: argument parsing and dispatch."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from pathlib import Path

from depthkit import RNG_ALGORITHM, __version__
from depthkit.analysis import available_experiments
from depthkit.boundary import DEFAULT_MIN_MEMBERS, DEFAULT_SHELL_FRACTION
from depthkit.cli.bootstrap import configure_logging, run_command
from depthkit.cli.commands import (
    cmd_boundary,
    cmd_contour,
    cmd_depth,
    cmd_experiment,
    cmd_shells,
    cmd_simulate,
    cmd_univariate,
)
from depthkit.errors import EXIT_INPUT
from depthkit.geometry import MetricKind
from depthkit.mmad import DEFAULT_SHELL_LEVELS, DEPTH_METHODS, MMAD_METHOD, FieldKind

_METRICS = [k.value for k in MetricKind]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Run seed (default: $DEPTHKIT_SEED, then 0)")
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker threads, 0 for all cores (default: $DEPTHKIT_THREADS, then all cores)",
    )
    common.add_argument(
        "--log-level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level for stderr output (default: INFO)",
    )
    common.add_argument("--env-file", type=Path, default=None, help="KEY=VALUE file overlaid on the environment")
    return common


def _data_parser() -> argparse.ArgumentParser:
    data = argparse.ArgumentParser(add_help=False)
    source = data.add_mutually_exclusive_group(required=True)
    source.add_argument("-i", "--input", help="CSV of observations (optional header row)")
    source.add_argument("--simulate", help="Generator spec (JSON/YAML path) or preset:<name>")
    data.add_argument("-o", "--output", default=None, help="Output CSV (default: stdout, no manifest)")
    return data


def _metric_argument(parser: argparse.ArgumentParser, default: str = "l2") -> None:
    parser.add_argument("--metric", choices=_METRICS, default=default, help=f"Distance geometry (default: {default})")


def _direction_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--directions",
        type=int,
        default=1000,
        help="Directions (projection, approximate Tukey) or simplices (approximate simplicial)",
    )
    parser.add_argument(
        "--approximate",
        action="store_true",
        help="Use randomized Tukey/simplicial depth even in 2-D",
    )


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per capability."""
    parser = argparse.ArgumentParser(
        prog="depthkit",
        description="MMAD/3MAD depth, classical depths and comparison experiments",
    )
    parser.add_argument("--version", action="version", version=f"depthkit {__version__} (rng: {RNG_ALGORITHM})")
    sub = parser.add_subparsers(dest="command", required=True)
    common, data = _common_parser(), _data_parser()

    depth = sub.add_parser("depth", parents=[common, data], help="Depth of every observation or query point")
    _metric_argument(depth)
    depth.add_argument("--method", choices=DEPTH_METHODS, default=MMAD_METHOD, help="Depth function")
    depth.add_argument(
        "--query",
        action="append",
        default=None,
        help="Query point x1,...,xd (repeatable, or ';'-separated); default: the observations",
    )
    _direction_arguments(depth)
    depth.set_defaults(handler=cmd_depth)

    contour = sub.add_parser("contour", parents=[common, data], help="Φ or depth on a 2-D grid")
    _metric_argument(contour)
    contour.add_argument("--field", choices=[k.value for k in FieldKind], default=FieldKind.SCALE.value)
    contour.add_argument("--method", choices=DEPTH_METHODS, default=MMAD_METHOD, help="Depth function for --field depth")
    contour.add_argument("--bounds", default=None, help="xmin,xmax,ymin,ymax (default: data range plus 10%%)")
    contour.add_argument("--res", default="50,50", help="Grid nodes nx,ny (default: 50,50)")
    _direction_arguments(contour)
    contour.set_defaults(handler=cmd_contour)

    shells = sub.add_parser("shells", parents=[common, data], help="Quantile shell of every observation")
    _metric_argument(shells)
    shells.add_argument(
        "--levels",
        default=",".join(f"{a:.2f}" for a in DEFAULT_SHELL_LEVELS),
        help="Strictly increasing levels in (0,1)",
    )
    shells.set_defaults(handler=cmd_shells)

    boundary = sub.add_parser("boundary", parents=[common, data], help="Boundary shell directions and gradient")
    _metric_argument(boundary)
    boundary.add_argument(
        "--center",
        default="median",
        help="median, mean, minimizer or explicit coordinates x1,...,xd (default: median)",
    )
    boundary.add_argument("--mmin", type=int, default=DEFAULT_MIN_MEMBERS, help="Minimum shell members")
    boundary.add_argument(
        "--fraction",
        type=float,
        default=DEFAULT_SHELL_FRACTION,
        help="Shell members as a fraction of n (the larger of this and --mmin is used)",
    )
    boundary.add_argument("--epsilon", type=float, default=None, help="Fixed shell half-width instead of adaptive")
    boundary.set_defaults(handler=cmd_boundary)

    univariate = sub.add_parser("univariate", parents=[common], help="G, depth and slopes in one dimension")
    source = univariate.add_mutually_exclusive_group(required=True)
    source.add_argument("-i", "--input", help="CSV holding the sample")
    source.add_argument("--model", help="Analytic density, e.g. normal:0,1 or exponential:1")
    univariate.add_argument("--column", type=int, default=0, help="0-based column of --input (default: 0)")
    univariate.add_argument("--at", required=True, help="Evaluation points v1,v2,...")
    univariate.add_argument("-o", "--output", default=None, help="Output CSV (default: stdout, no manifest)")
    univariate.set_defaults(handler=cmd_univariate)

    simulate = sub.add_parser("simulate", parents=[common], help="Write a generated sample to CSV")
    simulate.add_argument("--spec", required=True, help="Generator spec (JSON/YAML path) or preset:<name>")
    simulate.add_argument("--n", type=int, default=None, help="Override the sample size")
    simulate.add_argument("-o", "--output", default=None, help="Output CSV (default: stdout, no manifest)")
    simulate.set_defaults(handler=cmd_simulate)

    experiment = sub.add_parser("experiment", parents=[common], help="Run a packaged comparison experiment")
    experiment.add_argument("--name", required=True, choices=available_experiments())
    experiment.add_argument("--replicates", type=int, default=None, help="Override the replicate count")
    experiment.add_argument(
        "--set",
        action="append",
        default=None,
        metavar="KEY=VALUE",
        help="Config override in dot-list form, e.g. --set n=1000 (repeatable)",
    )
    experiment.add_argument("-o", "--output", required=True, help="Output directory")
    experiment.set_defaults(handler=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    logger = configure_logging(args.log_level)
    return run_command(args.handler, args, logger)
