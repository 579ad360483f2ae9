"""Logging setup, run context and exception-to-exit-code handling around every command."""

from __future__ import annotations

import argparse
import logging
import os
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from pathlib import Path

from depthkit.errors import EXIT_OK, EXIT_UNEXPECTED, DepthkitError, exit_code_for
from depthkit.utils import SEED_ENV_VAR, load_env_file, resolve_seed, resolve_threads, setup_logging

LOGGER_NAME = "depthkit"


@dataclass(frozen=True)
class RunContext:
    """Seed and worker count resolved from flags, env file and environment.

    Attributes:
        seed: Run seed (flag > DEPTHKIT_SEED > 0).
        seed_explicit: True when the seed came from a flag or the environment,
            in which case it also overrides seeds stored in generator specs.
        threads: Worker count (>= 1).

    """

    seed: int
    seed_explicit: bool
    threads: int


def configure_logging(level_name: str) -> logging.Logger:
    """Install the stderr handler on the ``depthkit`` logger."""
    level = logging.getLevelNamesMapping().get(level_name.upper(), logging.INFO)
    return setup_logging(level=level, name=LOGGER_NAME)


def command_environment(env_file: Path | None) -> Mapping[str, str]:
    """Process environment overlaid with ``--env-file`` values."""
    environ = dict(os.environ)
    if env_file is not None:
        environ.update(load_env_file(env_file))
    return environ


def resolve_context(args: argparse.Namespace) -> RunContext:
    """Build the RunContext for parsed arguments."""
    environ = command_environment(args.env_file)
    explicit = args.seed is not None or bool(environ.get(SEED_ENV_VAR, "").strip())
    return RunContext(
        seed=resolve_seed(args.seed, environ),
        seed_explicit=explicit,
        threads=resolve_threads(args.threads, environ),
    )


Handler = Callable[[argparse.Namespace, RunContext, logging.Logger], None]


def run_command(handler: Handler, args: argparse.Namespace, logger: logging.Logger) -> int:
    """Run one subcommand and translate its outcome into an exit code.

    Deliberate errors (bad input, numeric degeneracy, missed acceptance bands)
    are logged as one line; anything else is logged with its traceback.
    """
    try:
        handler(args, resolve_context(args), logger)
    except (DepthkitError, FileNotFoundError) as e:
        logger.error("%s failed: %s", args.command, e)  # noqa: TRY400
        return exit_code_for(e)
    except Exception:
        logger.exception("%s failed", args.command)
        return EXIT_UNEXPECTED
    return EXIT_OK
