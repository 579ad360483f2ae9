"""Symmetric method-by-method matrices with unit diagonal."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from depthkit.errors import InputError
from depthkit.geometry import FloatArray


@dataclass(frozen=True)
class MethodMatrix:
    """Pairwise agreement between named depth methods.

    Attributes:
        methods: Row/column names in order.
        values: Symmetric matrix with unit diagonal.

    """

    methods: tuple[str, ...]
    values: FloatArray

    def __post_init__(self) -> None:
        """Shape, symmetry and diagonal checks; freezes the array."""
        values = np.array(self.values, dtype=np.float64)
        k = len(self.methods)
        if values.shape != (k, k):
            msg = f"expected a {k}x{k} matrix for methods {list(self.methods)}, got shape {values.shape}"
            raise InputError(msg)
        if not np.array_equal(values, values.T):
            msg = "method matrix must be symmetric"
            raise InputError(msg)
        if not np.all(np.diag(values) == 1.0):
            msg = "method matrix must have a unit diagonal"
            raise InputError(msg)
        values.flags.writeable = False
        object.__setattr__(self, "methods", tuple(self.methods))
        object.__setattr__(self, "values", values)

    def entry(self, a: str, b: str) -> float:
        """Value for the method pair (a, b)."""
        try:
            i, j = self.methods.index(a), self.methods.index(b)
        except ValueError:
            msg = f"methods {a!r}/{b!r} not in {list(self.methods)}"
            raise InputError(msg) from None
        return float(self.values[i, j])

    def off_diagonal(self) -> FloatArray:
        """Upper-triangle entries, row by row."""
        rows, cols = np.triu_indices(len(self.methods), k=1)
        return self.values[rows, cols]

    def to_dict(self) -> dict[str, object]:
        """JSON-ready form."""
        return {"methods": list(self.methods), "values": self.values.tolist()}


def symmetric_from_pairs(k: int, pair_value: Sequence[float]) -> FloatArray:
    """k×k matrix from upper-triangle values (row by row) with a unit diagonal."""
    out = np.eye(k, dtype=np.float64)
    rows, cols = np.triu_indices(k, k=1)
    out[rows, cols] = pair_value
    out[cols, rows] = pair_value
    return out


def average_values(matrices: Sequence[MethodMatrix]) -> FloatArray:
    """Entrywise mean, summed in replicate order."""
    if not matrices:
        msg = "cannot average zero matrices"
        raise InputError(msg)
    methods = matrices[0].methods
    if any(mat.methods != methods for mat in matrices):
        msg = "cannot average matrices over different methods"
        raise InputError(msg)
    total = np.zeros_like(matrices[0].values)
    for mat in matrices:
        total = total + mat.values
    mean = total / len(matrices)
    np.fill_diagonal(mean, 1.0)
    return mean
