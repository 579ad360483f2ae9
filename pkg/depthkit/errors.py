"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class DepthkitError(Exception):
    """Base class for every error raised deliberately by depthkit."""


class InputError(DepthkitError, ValueError):
    """Invalid shapes, values, levels or names supplied by the caller."""


class EmptyShellError(InputError):
    """A boundary shell could not be formed from the sample."""


class DegeneracyError(DepthkitError, ArithmeticError):
    """A numeric quantity is undefined for the given data."""


class DegenerateCovarianceError(DegeneracyError):
    """Shape matrix is singular or not positive definite."""

    def __init__(self, detail: str) -> None:
        """Build the message with the standard remediation hint.

        Args:
            detail: Which check failed (e.g. the eigenvalue ratio).

        """
        super().__init__(
            f"degenerate covariance: {detail}; use the l2 metric or add a ridge "
            "to the shape matrix",
        )


class DegenerateBoundaryError(DegeneracyError):
    """Density vanishes on both sides of the G(v) boundary."""


class DegenerateDirectionsError(DegeneracyError):
    """Every projection direction has zero MAD."""


class AcceptanceError(DepthkitError):
    """An experiment result fell outside one of its acceptance bands."""


EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_ACCEPTANCE = 4


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit code.

    Args:
        exc: Exception raised while running a command.

    Returns:
        int: 2 for input errors, 3 for numeric degeneracy, 4 for acceptance
            failures, 1 for anything else.

    """
    if isinstance(exc, AcceptanceError):
        return EXIT_ACCEPTANCE
    if isinstance(exc, DegeneracyError):
        return EXIT_DEGENERATE
    if isinstance(exc, (InputError, FileNotFoundError)):
        return EXIT_INPUT
    return EXIT_UNEXPECTED
