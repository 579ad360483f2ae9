"""Spearman rank agreement between depth rankings."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy import stats

from depthkit.analysis.matrix import MethodMatrix, average_values, symmetric_from_pairs
from depthkit.errors import InputError


def spearman(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Pearson correlation of average ranks.

    Examples:
        >>> spearman([1, 2, 3], [1, 3, 2])
        0.5

    Raises:
        InputError: Fewer than 2 values, length mismatch, or a constant input.

    """
    x = np.asarray(a, dtype=np.float64).reshape(-1)
    y = np.asarray(b, dtype=np.float64).reshape(-1)
    if x.shape != y.shape:
        msg = f"spearman needs equal lengths, got {x.shape[0]} and {y.shape[0]}"
        raise InputError(msg)
    if x.shape[0] < 2:  # noqa: PLR2004
        msg = f"spearman needs at least 2 values, got {x.shape[0]}"
        raise InputError(msg)
    rx = stats.rankdata(x, method="average")
    ry = stats.rankdata(y, method="average")
    rx = rx - rx.mean()
    ry = ry - ry.mean()
    sxx = float(rx @ rx)
    syy = float(ry @ ry)
    if sxx == 0.0 or syy == 0.0:
        msg = "spearman correlation is undefined for a constant input"
        raise InputError(msg)
    return float(np.clip(float(rx @ ry) / np.sqrt(sxx * syy), -1.0, 1.0))


@dataclass(frozen=True)
class CorrelationMatrix(MethodMatrix):
    """Spearman coefficients between depth rankings."""

    @classmethod
    def average(cls, matrices: Sequence[CorrelationMatrix]) -> CorrelationMatrix:
        """Entrywise mean over replicates."""
        return cls(matrices[0].methods if matrices else (), average_values(matrices))


def spearman_matrix(depths: Mapping[str, npt.ArrayLike]) -> CorrelationMatrix:
    """Pairwise Spearman matrix of per-method depth vectors, in mapping order."""
    names = tuple(depths)
    arrays = [np.asarray(depths[name], dtype=np.float64) for name in names]
    pairs = [spearman(arrays[i], arrays[j]) for i in range(len(names)) for j in range(i + 1, len(names))]
    return CorrelationMatrix(names, symmetric_from_pairs(len(names), pairs))
