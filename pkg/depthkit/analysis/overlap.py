"""Jaccard overlap between central regions of different depths."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from depthkit.analysis.matrix import MethodMatrix, average_values, symmetric_from_pairs
from depthkit.errors import InputError
from depthkit.mmad import CentralRegion


def jaccard_overlap(r1: CentralRegion, r2: CentralRegion) -> float:
    """``|R₁ ∩ R₂| / |R₁ ∪ R₂|`` over member indices; 1 when both are empty.

    Raises:
        InputError: If the regions were cut from datasets of different size.

    """
    if r1.n != r2.n:
        msg = f"regions come from different datasets (n={r1.n} vs n={r2.n})"
        raise InputError(msg)
    union = np.union1d(r1.member_indices, r2.member_indices).shape[0]
    if union == 0:
        return 1.0
    inter = np.intersect1d(r1.member_indices, r2.member_indices, assume_unique=True).shape[0]
    return inter / union


@dataclass(frozen=True)
class OverlapMatrix(MethodMatrix):
    """Jaccard indices between deepest-α regions.

    Attributes:
        alpha: Region level shared by every method.

    """

    alpha: float = 0.5

    @classmethod
    def average(cls, matrices: Sequence[OverlapMatrix]) -> OverlapMatrix:
        """Entrywise mean over replicates at one α."""
        values = average_values(matrices)
        if len({m.alpha for m in matrices}) > 1:
            msg = "cannot average overlap matrices at different levels"
            raise InputError(msg)
        return cls(matrices[0].methods, values, matrices[0].alpha)

    def to_dict(self) -> dict[str, object]:
        """JSON-ready form including α."""
        return {**super().to_dict(), "alpha": self.alpha}


def overlap_matrix(regions: Mapping[str, CentralRegion]) -> OverlapMatrix:
    """Pairwise Jaccard matrix of per-method regions, in mapping order."""
    names = tuple(regions)
    alphas = {regions[name].alpha for name in names}
    if len(alphas) != 1:
        msg = f"regions must share one level, got {sorted(alphas)}"
        raise InputError(msg)
    pairs = [
        jaccard_overlap(regions[names[i]], regions[names[j]])
        for i in range(len(names))
        for j in range(i + 1, len(names))
    ]
    return OverlapMatrix(names, symmetric_from_pairs(len(names), pairs), alphas.pop())
