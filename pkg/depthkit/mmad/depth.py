"""3MAD depth: the fraction of sample Φ values strictly above Φ(v)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric, exceedance_fraction
from depthkit.mmad.scale import phi_scales


def _empty() -> FloatArray:
    return np.empty(0, dtype=np.float64)


@dataclass(frozen=True)
class DepthVector:
    """Per-observation Φ and depth, plus optional query results.

    ``depth[i] = #{j : phi[j] > phi[i]} / n``. Queries are ranked against the
    sample's Φ values without entering them.

    Attributes:
        phi: Φ(X_i), in units of the metric.
        depth: 3MAD depth of each observation, in [0, 1].
        query_phi: Φ at each query point.
        query_depth: Depth of each query point.

    """

    phi: FloatArray
    depth: FloatArray
    query_phi: FloatArray = field(default_factory=_empty)
    query_depth: FloatArray = field(default_factory=_empty)

    @property
    def n(self) -> int:
        """Sample size."""
        return int(self.phi.shape[0])


def depth_3mad(
    data: Dataset,
    m: Metric,
    queries: npt.ArrayLike | None = None,
    threads: int = 1,
) -> DepthVector:
    """3MAD depth of every observation and, optionally, of query points.

    Examples:
        >>> square = Dataset.from_array([[1, 1], [1, -1], [-1, 1], [-1, -1], [0, 0]])
        >>> depth_3mad(square, Metric.l2()).depth.tolist()
        [0.0, 0.0, 0.0, 0.0, 0.8]

    Raises:
        InputError: If n < 2.

    """
    if data.n < 2:  # noqa: PLR2004
        msg = f"3MAD depth needs at least 2 observations, got {data.n}"
        raise InputError(msg)
    phi = phi_scales(data.values, data, m, threads)
    depth = exceedance_fraction(phi, phi)
    if queries is None:
        return DepthVector(phi, depth)
    query_phi = phi_scales(queries, data, m, threads)
    return DepthVector(phi, depth, query_phi, exceedance_fraction(phi, query_phi))
