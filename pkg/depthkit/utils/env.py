"""Seed and thread-count resolution from flags, the environment and ``KEY=value`` files."""

import os
import warnings
from collections.abc import Mapping
from pathlib import Path

from depthkit.errors import InputError

SEED_ENV_VAR = "DEPTHKIT_SEED"
THREADS_ENV_VAR = "DEPTHKIT_THREADS"
DEFAULT_SEED = 0


def _parse_env_kv_line(line: str) -> tuple[str, str] | None:
    if not line or line.startswith("#") or "=" not in line:
        return None
    key, value = line.split("=", 1)
    return key.strip(), value.strip()


def load_env_file(env_path: Path) -> dict[str, str]:
    """Load ``KEY=VALUE`` pairs from a file.

    A missing file is optional and returns an empty dict; an unreadable one
    warns and returns whatever was parsed.

    Args:
        env_path: Path to the env file (one pair per line, ``#`` for comments).

    Returns:
        Mapping of key to value.

    """
    env_vars: dict[str, str] = {}
    if not env_path.exists():
        return env_vars

    try:
        with env_path.open(encoding="utf-8") as f:
            for raw_line in f:
                kv = _parse_env_kv_line(raw_line.strip())
                if kv:
                    env_vars[kv[0]] = kv[1]
    except OSError as e:
        warnings.warn(f"Could not load {env_path}: {e}", UserWarning, stacklevel=2)

    return env_vars


def _parse_int(raw: str, source: str) -> int:
    try:
        return int(raw)
    except ValueError:
        msg = f"{source} must be an integer, got {raw!r}"
        raise InputError(msg) from None


def resolve_seed(
    cli_seed: int | None,
    environ: Mapping[str, str] | None = None,
) -> int:
    """Pick the run seed: explicit flag, then ``DEPTHKIT_SEED``, then 0.

    Args:
        cli_seed: Value of ``--seed`` or None when absent.
        environ: Environment mapping (default: ``os.environ``).

    Returns:
        int: Non-negative seed.

    Raises:
        InputError: If the chosen value is not a non-negative integer.

    """
    env = os.environ if environ is None else environ
    if cli_seed is not None:
        seed = cli_seed
    elif env.get(SEED_ENV_VAR, "").strip():
        seed = _parse_int(env[SEED_ENV_VAR].strip(), SEED_ENV_VAR)
    else:
        seed = DEFAULT_SEED
    if seed < 0:
        msg = f"seed must be non-negative, got {seed}"
        raise InputError(msg)
    return seed


def resolve_threads(
    cli_threads: int | None,
    environ: Mapping[str, str] | None = None,
) -> int:
    """Pick the worker count: flag, then ``DEPTHKIT_THREADS``, then all cores.

    Zero means all cores.
    """
    env = os.environ if environ is None else environ
    if cli_threads is not None:
        threads = cli_threads
    elif env.get(THREADS_ENV_VAR, "").strip():
        threads = _parse_int(env[THREADS_ENV_VAR].strip(), THREADS_ENV_VAR)
    else:
        threads = 0
    if threads < 0:
        msg = f"thread count must be >= 0, got {threads}"
        raise InputError(msg)
    return threads or (os.cpu_count() or 1)
