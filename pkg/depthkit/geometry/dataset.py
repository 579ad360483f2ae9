"""Immutable observation matrix plus coercion helpers for query points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from depthkit.errors import InputError

FloatArray: TypeAlias = npt.NDArray[np.float64]
IntArray: TypeAlias = npt.NDArray[np.int64]


def _first_non_finite(arr: FloatArray) -> tuple[int, ...]:
    bad = np.argwhere(~np.isfinite(arr))
    return tuple(int(i) for i in bad[0])


def _frozen(arr: FloatArray) -> FloatArray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Dataset:
    """An n×d sample with column labels.

    ``values`` is copied to a read-only float64 array on construction, so a
    Dataset never changes shape or content afterwards. A 1-D input is read as
    a single column.

    Attributes:
        values: Observation matrix, one row per observation.
        labels: Column names; defaults to ``x1 … xd``.

    """

    values: FloatArray
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        """Validate shape and finiteness, then freeze the matrix."""
        try:
            arr = np.array(self.values, dtype=np.float64)
        except (TypeError, ValueError) as e:
            msg = f"dataset values must be numeric: {e}"
            raise InputError(msg) from None
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2:  # noqa: PLR2004
            msg = f"dataset must be a 2-D matrix, got {arr.ndim} dimensions"
            raise InputError(msg)
        n, d = arr.shape
        if n < 1 or d < 1:
            msg = f"dataset needs n >= 1 and d >= 1, got n={n}, d={d}"
            raise InputError(msg)
        if not np.isfinite(arr).all():
            where = _first_non_finite(arr)
            msg = f"dataset contains a non-finite value at row {where[0]}, column {where[1]}"
            raise InputError(msg)
        labels = tuple(self.labels) or tuple(f"x{j + 1}" for j in range(d))
        if len(labels) != d:
            msg = f"expected {d} column labels, got {len(labels)}"
            raise InputError(msg)
        object.__setattr__(self, "values", _frozen(arr))
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_array(
        cls,
        values: npt.ArrayLike,
        labels: tuple[str, ...] | list[str] | None = None,
    ) -> Dataset:
        """Build a Dataset from anything numpy can turn into a matrix."""
        return cls(np.asarray(values, dtype=np.float64), tuple(labels or ()))

    @property
    def n(self) -> int:
        """Number of observations."""
        return int(self.values.shape[0])

    @property
    def d(self) -> int:
        """Number of coordinates."""
        return int(self.values.shape[1])

    def transformed(self, matrix: npt.ArrayLike, shift: npt.ArrayLike) -> Dataset:
        """Return the dataset under ``x -> A x + b`` with the same labels."""
        a = np.asarray(matrix, dtype=np.float64)
        b = np.asarray(shift, dtype=np.float64)
        return Dataset(self.values @ a.T + b, self.labels)


def as_vector(v: npt.ArrayLike, d: int, what: str = "point") -> FloatArray:
    """Coerce ``v`` to a finite float vector of length ``d``.

    Raises:
        InputError: On a dimension mismatch or a non-finite entry.

    """
    arr = np.asarray(v, dtype=np.float64).reshape(-1)
    if arr.shape[0] != d:
        msg = f"{what} has dimension {arr.shape[0]}, expected {d}"
        raise InputError(msg)
    if not np.isfinite(arr).all():
        msg = f"{what} contains a non-finite coordinate"
        raise InputError(msg)
    return arr


def as_points(points: npt.ArrayLike, d: int, what: str = "queries") -> FloatArray:
    """Coerce ``points`` to a finite k×d float matrix (a single vector becomes k=1)."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim <= 1:
        arr = arr.reshape(1, -1) if d > 1 or arr.ndim == 0 else arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[1] != d:  # noqa: PLR2004
        msg = f"{what} must have shape (k, {d}), got {arr.shape}"
        raise InputError(msg)
    if not np.isfinite(arr).all():
        msg = f"{what} contain a non-finite coordinate"
        raise InputError(msg)
    return arr
