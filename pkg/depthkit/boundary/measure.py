"""Boundary direction averages: directional slopes, the resultant vector and μ_v."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from depthkit.boundary.shell import BoundaryShell
from depthkit.errors import EmptyShellError, InputError
from depthkit.geometry import FloatArray, as_vector

_UNIT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class AngularMeasure:
    """Empirical distribution of boundary directions with equal weights.

    Attributes:
        directions: m×d unit vectors.
        weights: 1/m each.
        resultant: Weighted mean direction.
        resultant_length: ‖resultant‖₂, in [0, 1].
        angles: atan2 angles in [−π, π) when d = 2, else None.

    """

    directions: FloatArray
    weights: FloatArray
    resultant: FloatArray
    resultant_length: float
    angles: FloatArray | None


def _nonempty(shell: BoundaryShell) -> None:
    if shell.size == 0:
        msg = "boundary shell is empty"
        raise EmptyShellError(msg)


def _same_center(v: npt.ArrayLike, shell: BoundaryShell) -> None:
    center = as_vector(v, shell.center.shape[0], "v")
    if not np.array_equal(center, shell.center):
        msg = "shell was extracted at a different center"
        raise InputError(msg)


def gradient(v: npt.ArrayLike, shell: BoundaryShell) -> FloatArray:
    """Mean outward unit direction over the boundary shell.

    This is the boundary imbalance vector: it points toward where the
    boundary mass concentrates, and Φ decreases along it (the steepest
    ascent direction of Φ is its negation).
    """
    _same_center(v, shell)
    _nonempty(shell)
    return shell.unit_directions.mean(axis=0)


def directional_derivative(
    v: npt.ArrayLike,
    u: npt.ArrayLike,
    shell: BoundaryShell,
) -> float:
    """Mean of ``⟨u, U⟩`` over boundary unit directions U; equals ``⟨gradient, u⟩``.

    Raises:
        InputError: If ``u`` is not a unit vector or the shell center differs.
        EmptyShellError: If the shell has no members.

    """
    direction = as_vector(u, shell.center.shape[0], "u")
    if abs(float(np.linalg.norm(direction)) - 1.0) > _UNIT_TOLERANCE:
        msg = f"u must be a unit vector, got norm {np.linalg.norm(direction)}"
        raise InputError(msg)
    return float(gradient(v, shell) @ direction)


def angular_measure(shell: BoundaryShell) -> AngularMeasure:
    """Uniform measure on the shell's unit directions.

    Examples:
        >>> import numpy as np
        >>> shell = BoundaryShell(np.zeros(2), 1.0, 0.0, np.array([0]), np.array([[1.0, 0.0]]))
        >>> angular_measure(shell).resultant_length
        1.0

    """
    _nonempty(shell)
    units = shell.unit_directions
    m = units.shape[0]
    resultant = units.mean(axis=0)
    angles = None
    if units.shape[1] == 2:  # noqa: PLR2004
        raw = np.arctan2(units[:, 1], units[:, 0])
        angles = np.where(raw >= np.pi, -np.pi, raw)
    return AngularMeasure(
        directions=units,
        weights=np.full(m, 1.0 / m),
        resultant=resultant,
        resultant_length=min(1.0, float(np.linalg.norm(resultant))),
        angles=angles,
    )
