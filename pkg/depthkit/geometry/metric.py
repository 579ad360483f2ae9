"""L1, L2 and Mahalanobis distance geometries."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
import numpy.typing as npt
from scipy import linalg

from depthkit.errors import InputError
from depthkit.geometry.covariance import sample_covariance, validate_spd
from depthkit.geometry.dataset import Dataset, FloatArray, as_points, as_vector
from depthkit.utils.parallel import ordered_map

# Upper bound on elements of one k×n×d difference block.
_BLOCK_ELEMENTS = 2_000_000


class MetricKind(StrEnum):
    """Supported norms."""

    L1 = "l1"
    L2 = "l2"
    MAHALANOBIS = "mahalanobis"


@dataclass(frozen=True)
class Metric:
    """A distance geometry on R^d.

    Mahalanobis distances are computed through the lower Cholesky factor L of
    the shape matrix: ``‖L⁻¹(x − y)‖₂``. No inverse is ever formed.

    Attributes:
        kind: Which norm.
        shape: SPD shape matrix (Mahalanobis only).

    """

    kind: MetricKind
    shape: FloatArray | None = None
    _factor: FloatArray | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the shape matrix and cache its Cholesky factor."""
        kind = MetricKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is not MetricKind.MAHALANOBIS:
            if self.shape is not None:
                msg = f"metric {kind.value} does not take a shape matrix"
                raise InputError(msg)
            return
        if self.shape is None:
            msg = "mahalanobis metric needs a shape matrix"
            raise InputError(msg)
        shape = validate_spd(self.shape)
        shape.flags.writeable = False
        factor = linalg.cholesky(shape, lower=True)
        factor.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "_factor", factor)

    @classmethod
    def l1(cls) -> Metric:
        """Manhattan norm."""
        return cls(MetricKind.L1)

    @classmethod
    def l2(cls) -> Metric:
        """Euclidean norm."""
        return cls(MetricKind.L2)

    @classmethod
    def mahalanobis(cls, shape: npt.ArrayLike) -> Metric:
        """Norm induced by an SPD shape matrix Σ."""
        return cls(MetricKind.MAHALANOBIS, np.asarray(shape, dtype=np.float64))

    @property
    def name(self) -> str:
        """Lower-case metric name as used on the command line."""
        return self.kind.value

    def check_dimension(self, d: int) -> None:
        """Raise InputError when the shape matrix does not match ``d``."""
        if self.shape is not None and self.shape.shape[0] != d:
            msg = f"shape matrix is {self.shape.shape[0]}-dimensional, data is {d}-dimensional"
            raise InputError(msg)

    def whiten(self, points: npt.ArrayLike) -> FloatArray:
        """Map points so that L2 distances between images equal metric distances.

        Identity for L2; ``L⁻¹ x`` for Mahalanobis. Whitening the sample once
        turns bulk Mahalanobis evaluation into L2 evaluation.

        Raises:
            InputError: For the L1 metric, which has no linear whitening.

        """
        arr = np.asarray(points, dtype=np.float64)
        if self.kind is MetricKind.L1:
            msg = "the l1 metric cannot be whitened"
            raise InputError(msg)
        if self._factor is None:
            return arr
        self.check_dimension(arr.shape[-1])
        solved = linalg.solve_triangular(self._factor, np.atleast_2d(arr).T, lower=True)
        return solved.T.reshape(arr.shape)

    def reduce_rows(
        self,
        queries: npt.ArrayLike,
        points: npt.ArrayLike,
        reducer: Callable[[FloatArray], FloatArray],
        threads: int = 1,
    ) -> FloatArray:
        """Apply ``reducer`` to blocks of the (k, n) query-to-point distance matrix.

        The full matrix is never materialized; each block of rows is reduced
        as soon as it is computed and the results are concatenated in order.
        Every distance in depthkit goes through this routine, so a value never
        depends on which caller asked for it or on ``threads``.
        """
        pts = np.asarray(points, dtype=np.float64)
        d = pts.shape[1]
        self.check_dimension(d)
        qs = as_points(queries, d)
        if self.kind is MetricKind.MAHALANOBIS:
            qs, pts = self.whiten(qs), self.whiten(pts)
        rows = max(1, _BLOCK_ELEMENTS // max(1, pts.shape[0] * d))
        l1 = self.kind is MetricKind.L1
        blocks = ordered_map(
            lambda s: reducer(_block_distances(qs[s : s + rows], pts, l1=l1)),
            range(0, max(1, qs.shape[0]), rows),
            threads,
        )
        return np.concatenate(blocks, axis=0)

    def pairwise(
        self,
        queries: npt.ArrayLike,
        points: npt.ArrayLike,
        threads: int = 1,
    ) -> FloatArray:
        """Distance matrix of shape (k, n) between k queries and n points."""
        return self.reduce_rows(queries, points, lambda block: block, threads)

    def distances(self, points: npt.ArrayLike, v: npt.ArrayLike) -> FloatArray:
        """Distances from every point to a single location ``v``."""
        pts = np.asarray(points, dtype=np.float64)
        return self.pairwise(as_vector(v, pts.shape[1], "center"), pts)[0]


def _block_distances(queries: FloatArray, points: FloatArray, *, l1: bool) -> FloatArray:
    diff = points[np.newaxis, :, :] - queries[:, np.newaxis, :]
    if l1:
        return np.abs(diff).sum(axis=-1)
    return np.sqrt(np.einsum("knd,knd->kn", diff, diff))


def distance(x: npt.ArrayLike, y: npt.ArrayLike, m: Metric) -> float:
    """Metric distance between two d-vectors.

    Examples:
        >>> distance([0, 0], [3, 4], Metric.l2())
        5.0
        >>> distance([0, 0], [3, 4], Metric.l1())
        7.0

    Raises:
        InputError: If the vectors' dimensions differ or do not match the shape matrix.

    """
    xv = np.asarray(x, dtype=np.float64).reshape(-1)
    yv = as_vector(y, xv.shape[0], "y")
    xv = as_vector(xv, xv.shape[0], "x")
    return float(m.pairwise(xv, yv[np.newaxis, :])[0, 0])


def metric_from_name(
    name: str,
    data: Dataset | None = None,
    shape: npt.ArrayLike | None = None,
) -> Metric:
    """Build a metric from its command-line name.

    Mahalanobis uses ``shape`` when given, otherwise the sample covariance of
    ``data``.

    Raises:
        InputError: Unknown name, or Mahalanobis with neither data nor shape.

    """
    try:
        kind = MetricKind(name.lower())
    except ValueError:
        choices = ", ".join(k.value for k in MetricKind)
        msg = f"unknown metric {name!r}; choose one of {choices}"
        raise InputError(msg) from None
    if kind is not MetricKind.MAHALANOBIS:
        return Metric(kind)
    if shape is not None:
        return Metric.mahalanobis(shape)
    if data is None:
        msg = "mahalanobis metric needs a dataset or an explicit shape matrix"
        raise InputError(msg)
    return Metric.mahalanobis(sample_covariance(data))
