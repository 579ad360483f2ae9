"""Projection depth from median/MAD standardized projections."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from depthkit.classical.config import ClassicalMethod, DepthMethodConfig
from depthkit.errors import DegenerateDirectionsError, InputError
from depthkit.geometry import (
    Dataset,
    FloatArray,
    as_points,
    as_vector,
    coordinate_axes,
    lower_median,
    sample_unit_directions,
)
from depthkit.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

_QUERY_BLOCK = 512


@dataclass(frozen=True)
class ProjectionModel:
    """Per-direction medians and raw MADs of the projected sample.

    Fitted once per dataset so every query is judged against the same
    directions.

    Attributes:
        directions: K×d unit directions with MAD > 0.
        medians: Lower median of each projection.
        mads: Lower-median absolute deviation of each projection (no 1.4826 factor).
        skipped: Number of candidate directions dropped for MAD = 0.

    """

    directions: FloatArray
    medians: FloatArray
    mads: FloatArray
    skipped: int

    @classmethod
    def fit(cls, data: Dataset, cfg: DepthMethodConfig) -> ProjectionModel:
        """Project the sample on seeded directions plus the ±e_j axes.

        Raises:
            InputError: If n < 2 or the config is for another method.
            DegenerateDirectionsError: If every direction has MAD = 0.

        """
        if cfg.method is not ClassicalMethod.PROJECTION:
            msg = f"projection depth called with a {cfg.method.value} config"
            raise InputError(msg)
        if data.n < 2:  # noqa: PLR2004
            msg = f"projection depth needs n >= 2, got n={data.n}"
            raise InputError(msg)
        candidates = np.concatenate(
            [
                sample_unit_directions(cfg.n_directions, data.d, cfg.seed),
                coordinate_axes(data.d),
            ],
        )
        projected = data.values @ candidates.T
        medians = lower_median(projected, axis=0)
        mads = lower_median(np.abs(projected - medians), axis=0)
        keep = mads > 0.0
        skipped = int(np.sum(~keep))
        if not keep.any():
            msg = f"all {candidates.shape[0]} projection directions have zero MAD"
            raise DegenerateDirectionsError(msg)
        if skipped:
            logger.warning(
                "skipped %d of %d projection directions with zero MAD",
                skipped,
                candidates.shape[0],
            )
        return cls(candidates[keep], medians[keep], mads[keep], skipped)

    def outlyingness(self, queries: FloatArray) -> FloatArray:
        """``max_u |uᵀv − Med(uᵀX)| / MAD(uᵀX)`` for each query row."""
        standardized = np.abs(queries @ self.directions.T - self.medians) / self.mads
        return standardized.max(axis=1)


def projection_depths(
    queries: npt.ArrayLike,
    data: Dataset,
    cfg: DepthMethodConfig,
    threads: int = 1,
) -> FloatArray:
    """Projection depth ``1 / (1 + outlyingness)`` at every query point."""
    model = ProjectionModel.fit(data, cfg)
    qs = as_points(queries, data.d)
    blocks = ordered_map(
        lambda s: model.outlyingness(qs[s : s + _QUERY_BLOCK]),
        range(0, qs.shape[0], _QUERY_BLOCK),
        threads,
    )
    if not blocks:
        return np.empty(0, dtype=np.float64)
    return 1.0 / (1.0 + np.concatenate(blocks))


def projection_depth(v: npt.ArrayLike, data: Dataset, cfg: DepthMethodConfig) -> float:
    """Projection depth of a single point.

    Examples:
        >>> five = Dataset.from_array([1, 2, 3, 4, 5])
        >>> round(projection_depth([5], five, DepthMethodConfig("projection")), 12)
        0.333333333333

    """
    return float(projection_depths(as_vector(v, data.d), data, cfg)[0])
