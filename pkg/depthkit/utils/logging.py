"""Console formatters and banner helpers; all log output goes to stderr."""

import logging
import sys
from collections.abc import Mapping, Sequence
from typing import ClassVar

_PREVIEW_MAX_LEN = 100

_STANDARD_RECORD_FIELDS: frozenset[str] = frozenset(
    {
        "name",
        "msg",
        "args",
        "created",
        "filename",
        "funcName",
        "levelname",
        "levelno",
        "lineno",
        "module",
        "msecs",
        "message",
        "pathname",
        "process",
        "processName",
        "relativeCreated",
        "thread",
        "threadName",
        "exc_info",
        "exc_text",
        "stack_info",
        "taskName",
        "asctime",
    },
)

_PLAIN_FORMAT = "%(asctime)s | %(levelname)-8s | %(message)s"
_COLOR_FORMAT = "%(asctime)s | %(levelname)s | %(message)s"
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _format_value(value: object) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        items: Sequence[object] = value
        return "[" + ", ".join(_format_value(v) for v in items) + "]"
    if isinstance(value, dict):
        mapping: Mapping[object, object] = value
        return "{" + ", ".join(f"{k}={_format_value(v)}" for k, v in mapping.items()) + "}"
    text = str(value)
    if len(text) > _PREVIEW_MAX_LEN:
        return text[: _PREVIEW_MAX_LEN - 3] + "..."
    return text


class ContextFormatter(logging.Formatter):
    """Formatter that appends ``extra=`` fields as ``key=value`` pairs."""

    def format(self, record: logging.LogRecord) -> str:
        """Format the record, then append context fragments.

        Args:
            record: Log record to format.

        Returns:
            str: Formatted line, e.g. ``... | replicate done | replicate=3 seed=2027``.

        """
        line = super().format(record)
        parts = [
            f"{key}={_format_value(value)}"
            for key, value in record.__dict__.items()
            if key not in _STANDARD_RECORD_FIELDS and not key.startswith("_")
        ]
        if parts:
            # Keep the traceback (if any) after the context on the first line.
            head, sep, tail = line.partition("\n")
            line = f"{head} | {' '.join(parts)}{sep}{tail}"
        return line


class ColoredFormatter(ContextFormatter):
    """Context formatter with colors and icons for terminal output."""

    # ANSI color codes
    COLORS: ClassVar[dict[str, str]] = {
        "DEBUG": "\033[36m",  # Cyan
        "INFO": "\033[32m",  # Green
        "WARNING": "\033[33m",  # Yellow
        "ERROR": "\033[31m",  # Red
        "CRITICAL": "\033[35m",  # Magenta
    }
    RESET = "\033[0m"

    # Only non-INFO levels get an icon
    ICONS: ClassVar[dict[str, str]] = {
        "DEBUG": "🔍",
        "WARNING": "⚠️",
        "ERROR": "✗",
        "CRITICAL": "🚨",
    }

    def format(self, record: logging.LogRecord) -> str:
        """Format log record with colors and icons.

        Args:
            record: Log record to format.

        Returns:
            str: Formatted log message with ANSI color codes and icons.

        """
        levelname = record.levelname
        if levelname in self.COLORS:
            icon = self.ICONS.get(levelname, "")
            icon_space = f"{icon} " if icon else ""
            record.levelname = (
                f"{self.COLORS[levelname]}{icon_space}{levelname}{self.RESET}"
            )
        try:
            return super().format(record)
        finally:
            record.levelname = levelname


def setup_logging(
    level: int = logging.INFO,
    name: str | None = None,
    use_colors: bool = True,  # noqa: FBT001,FBT002
) -> logging.Logger:
    """Configure a logger that writes to stderr.

    stdout stays free for CSV output, so every handler installed here targets
    stderr.

    Args:
        level: Logging level (default: INFO)
        name: Logger name (default: root logger)
        use_colors: Whether to use colored output when stderr is a terminal

    Returns:
        Configured logger instance

    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Child loggers must not duplicate into the root handler
    if name is not None:
        logger.propagate = False

    logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)

    formatter: logging.Formatter
    if use_colors and sys.stderr.isatty():
        formatter = ColoredFormatter(_COLOR_FORMAT, datefmt=_DATE_FORMAT)
    else:
        formatter = ContextFormatter(_PLAIN_FORMAT, datefmt=_DATE_FORMAT)

    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


def log_with_extra(
    logger: logging.Logger,
    level: int,
    message: str,
    **fields: object,
) -> None:
    """Log a message with extra context fields rendered as ``key=value``.

    Args:
        logger: Logger instance
        level: Log level (e.g., logging.INFO)
        message: Log message
        **fields: Context fields to include in the line

    """
    logger.log(level, message, extra=fields)


def log_header(logger: logging.Logger, title: str, context: str | None = None) -> None:
    """Log a compact section header in format: [Title] context.

    Args:
        logger: Logger instance
        title: Section title (will be wrapped in brackets)
        context: Optional additional context information

    """
    if context:
        logger.info("[%s] %s", title, context)
    else:
        logger.info("[%s]", title)


def log_operation(logger: logging.Logger, message: str) -> None:
    """Log an operation start message with → prefix."""
    logger.info("  → %s", message)


def log_success(logger: logging.Logger, message: str) -> None:
    """Log a success/completion message with ✓ prefix."""
    logger.info("  ✓ %s", message)


def log_config(
    logger: logging.Logger,
    config_dict: Mapping[str, object],
    title: str = "Configuration",
) -> None:
    """Log run parameters, one ``key: value`` line each, keys sorted.

    Example:
        >>> log_config(logger, {"method": "3mad", "metric": "l2"})
        [Configuration]
            method: 3mad
            metric: l2

    """
    log_header(logger, title)
    for key in sorted(config_dict):
        logger.info("    %s: %s", key, _format_value(config_dict[key]))
