"""Thin annuli around the Φ(v) sphere, the finite-sample stand-in for the boundary."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from depthkit.errors import EmptyShellError, InputError
from depthkit.geometry import (
    Dataset,
    FloatArray,
    IntArray,
    Metric,
    as_vector,
    lower_median,
    lower_order_statistic,
)

logger = logging.getLogger(__name__)

DEFAULT_MIN_MEMBERS = 10
DEFAULT_SHELL_FRACTION = 0.05


@dataclass(frozen=True)
class ShellPolicy:
    """How wide the boundary annulus is.

    Adaptive (default): the half-width is the smallest ε that captures
    ``max(min_members, ⌈fraction·n⌉)`` points. A fixed ``epsilon`` overrides.
    """

    min_members: int = DEFAULT_MIN_MEMBERS
    fraction: float = DEFAULT_SHELL_FRACTION
    epsilon: float | None = None

    def __post_init__(self) -> None:
        """Validate the policy parameters."""
        if self.min_members < 1:
            msg = f"min_members must be >= 1, got {self.min_members}"
            raise InputError(msg)
        if not 0.0 <= self.fraction <= 1.0:
            msg = f"shell fraction must lie in [0, 1], got {self.fraction}"
            raise InputError(msg)
        if self.epsilon is not None and not (self.epsilon >= 0.0 and math.isfinite(self.epsilon)):
            msg = f"epsilon must be a finite value >= 0, got {self.epsilon}"
            raise InputError(msg)

    def required_members(self, n: int) -> int:
        """m_min for a sample of size n."""
        return max(self.min_members, math.ceil(round(self.fraction * n, 9)))


@dataclass(frozen=True)
class BoundaryShell:
    """Observations within ε of the sphere ‖x − v‖ = Φ(v).

    Attributes:
        center: The point v.
        radius: Φ(v).
        half_width: ε.
        member_indices: 0-based indices of shell members (none equal to v).
        unit_directions: Euclidean unit vectors (X_i − v)/‖X_i − v‖₂, one row per member.

    """

    center: FloatArray
    radius: float
    half_width: float
    member_indices: IntArray
    unit_directions: FloatArray

    @property
    def size(self) -> int:
        """Number of members."""
        return int(self.member_indices.shape[0])


def extract_boundary_shell(
    v: npt.ArrayLike,
    data: Dataset,
    m: Metric,
    policy: ShellPolicy | None = None,
) -> BoundaryShell:
    """Collect the boundary annulus ``|dist(X_i, v) − Φ(v)| <= ε`` around ``v``.

    Membership uses the metric; unit directions are Euclidean. Points at
    distance zero from ``v`` are never members.

    Raises:
        EmptyShellError: If every point equals ``v``, the sample is smaller
            than m_min (adaptive policy), or a fixed ε captures nothing.

    """
    policy = policy or ShellPolicy()
    center = as_vector(v, data.d, "center")
    dist = m.distances(data.values, center)
    radius = float(lower_median(dist))
    candidates = dist > 0.0
    if not candidates.any():
        msg = "all observations coincide with the shell center"
        raise EmptyShellError(msg)
    gaps = np.abs(dist - radius)
    if policy.epsilon is not None:
        epsilon = float(policy.epsilon)
    else:
        m_min = policy.required_members(data.n)
        available = int(candidates.sum())
        if available < m_min:
            msg = f"need at least {m_min} observations away from the center for a boundary shell, got {available}"
            raise EmptyShellError(msg)
        epsilon = float(lower_order_statistic(gaps[candidates], m_min))
        logger.debug("adaptive shell half-width %.6g for m_min=%d", epsilon, m_min)
    members = np.flatnonzero(candidates & (gaps <= epsilon)).astype(np.int64)
    if members.shape[0] == 0:
        msg = f"no observation lies within epsilon={epsilon} of radius {radius}"
        raise EmptyShellError(msg)
    offsets = data.values[members] - center
    units = offsets / np.linalg.norm(offsets, axis=1)[:, np.newaxis]
    return BoundaryShell(center, radius, epsilon, members, units)
