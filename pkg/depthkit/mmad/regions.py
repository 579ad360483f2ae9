"""Central regions R_α and quantile shells over sample Φ values."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from depthkit.errors import InputError
from depthkit.geometry import FloatArray, IntArray, lower_quantile, validate_level
from depthkit.mmad.depth import DepthVector

DEFAULT_SHELL_LEVELS: tuple[float, ...] = (0.05, 0.10, 0.25, 0.50, 0.75, 0.90, 0.95)


@dataclass(frozen=True)
class CentralRegion:
    """Observations whose outlyingness score is at most the α-quantile threshold.

    For 3MAD the score is Φ and ``radius_threshold`` is q_α; regions built
    from another depth use −depth as the score.

    Attributes:
        alpha: Level in (0, 1).
        radius_threshold: Lower empirical α-quantile of the scores.
        member_indices: Sorted 0-based indices with score <= threshold.
        n: Size of the dataset the region was cut from.

    """

    alpha: float
    radius_threshold: float
    member_indices: IntArray
    n: int

    @property
    def size(self) -> int:
        """Number of members."""
        return int(self.member_indices.shape[0])


def central_region_from_scores(scores: npt.ArrayLike, alpha: float) -> CentralRegion:
    """Deepest-α region for any score where smaller means more central."""
    validate_level(alpha)
    arr = np.asarray(scores, dtype=np.float64).reshape(-1)
    if arr.shape[0] == 0:
        msg = "cannot cut a central region from an empty sample"
        raise InputError(msg)
    threshold = lower_quantile(arr, alpha)
    members = np.flatnonzero(arr <= threshold).astype(np.int64)
    return CentralRegion(float(alpha), threshold, members, int(arr.shape[0]))


def central_region(dv: DepthVector, alpha: float) -> CentralRegion:
    """R_α = {X_i : Φ(X_i) <= q_α} with q_α the ⌈αn⌉-th smallest Φ.

    Examples:
        >>> dv = DepthVector(np.array([1.0, 2.0, 3.0, 4.0]), np.zeros(4))
        >>> central_region(dv, 0.5).member_indices.tolist()
        [0, 1]

    """
    return central_region_from_scores(dv.phi, alpha)


@dataclass(frozen=True)
class ShellAssignment:
    """Partition of the sample into k + 1 nested-quantile shells.

    Shell 0 holds Φ <= q_{α₁}; shell j holds q_{α_j} < Φ <= q_{α_{j+1}};
    shell k holds Φ > q_{α_k}.

    Attributes:
        levels: Strictly increasing α levels.
        thresholds: q_α for each level.
        shell_index: Shell of each observation.

    """

    levels: tuple[float, ...]
    thresholds: FloatArray
    shell_index: IntArray

    def sizes(self) -> list[int]:
        """Observation count of every shell, innermost first."""
        counts = np.bincount(self.shell_index, minlength=len(self.levels) + 1)
        return [int(c) for c in counts]

    def members(self, shell: int) -> IntArray:
        """0-based indices in the given shell."""
        return np.flatnonzero(self.shell_index == shell).astype(np.int64)


def validate_levels(levels: Sequence[float]) -> tuple[float, ...]:
    """Return ``levels`` as a tuple if non-empty, inside (0, 1) and strictly increasing."""
    out = tuple(float(a) for a in levels)
    if not out:
        msg = "at least one shell level is required"
        raise InputError(msg)
    for a in out:
        validate_level(a, "shell level")
    if any(b <= a for a, b in zip(out, out[1:], strict=False)):
        msg = f"shell levels must be strictly increasing, got {list(out)}"
        raise InputError(msg)
    return out


def shell_assign(
    dv: DepthVector,
    levels: Sequence[float] = DEFAULT_SHELL_LEVELS,
) -> ShellAssignment:
    """Assign each observation to its quantile shell.

    Examples:
        >>> dv = DepthVector(np.arange(1.0, 9.0), np.zeros(8))
        >>> shell_assign(dv, [0.25, 0.75]).sizes()
        [2, 4, 2]

    """
    checked = validate_levels(levels)
    thresholds = np.array([lower_quantile(dv.phi, a) for a in checked])
    index = np.searchsorted(thresholds, dv.phi, side="left").astype(np.int64)
    return ShellAssignment(checked, thresholds, index)
