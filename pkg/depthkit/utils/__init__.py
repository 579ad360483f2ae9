"""General utilities for depthkit.

This module provides utility functions for:
- Logging: stderr loggers with colored or key=value context output
- Environment: seed and thread resolution from flags, env vars and env files
- Parallel: order-preserving thread fan-out

Example:
    >>> from depthkit.utils import setup_logging, resolve_seed
    >>> logger = setup_logging(name="depthkit")
    >>> seed = resolve_seed(None)

"""

from .env import SEED_ENV_VAR, THREADS_ENV_VAR, load_env_file, resolve_seed, resolve_threads
from .logging import (
    ColoredFormatter,
    ContextFormatter,
    log_config,
    log_header,
    log_operation,
    log_success,
    log_with_extra,
    setup_logging,
)
from .parallel import ordered_map

__all__ = [
    "SEED_ENV_VAR",
    "THREADS_ENV_VAR",
    "ColoredFormatter",
    "ContextFormatter",
    "load_env_file",
    "log_config",
    "log_header",
    "log_operation",
    "log_success",
    "log_with_extra",
    "ordered_map",
    "resolve_seed",
    "resolve_threads",
    "setup_logging",
]
