"""Halfspace (Tukey) depth: exact angular sweep in 2-D, direction search otherwise."""

import numpy as np
import numpy.typing as npt

from depthkit.classical._angles import ray_sweep
from depthkit.classical.config import ClassicalMethod, DepthMethodConfig
from depthkit.errors import InputError
from depthkit.geometry import (
    Dataset,
    FloatArray,
    as_points,
    as_vector,
    sample_unit_directions,
)
from depthkit.utils.parallel import ordered_map

_QUERY_BLOCK = 256


def _check_cfg(cfg: DepthMethodConfig) -> None:
    if cfg.method is not ClassicalMethod.TUKEY:
        msg = f"tukey depth called with a {cfg.method.value} config"
        raise InputError(msg)


def tukey_count_2d(v: FloatArray, points: FloatArray) -> int:
    """Smallest number of points in a closed halfplane whose boundary passes through ``v``.

    Between consecutive critical directions the halfplane count is constant,
    so it suffices to rotate the boundary just past every ray: the closed
    halfplane then holds the half-open arc ``(θ_j, θ_j + π]`` (rays strictly
    ahead plus the opposite ray) or its complement. Points equal to ``v``
    lie in every closed halfplane.
    """
    sweep = ray_sweep(v, points)
    if sweep.size == 0:
        return sweep.coincident
    after = sweep.ahead + sweep.opposite
    return sweep.coincident + int(min(after.min(), (sweep.size - after).min()))


def _approximate_counts(
    queries: FloatArray,
    values: FloatArray,
    directions: FloatArray,
) -> FloatArray:
    projected = np.sort(values @ directions.T, axis=0)
    query_proj = queries @ directions.T
    counts = np.empty_like(query_proj)
    for k in range(directions.shape[0]):
        counts[:, k] = np.searchsorted(projected[:, k], query_proj[:, k], side="right")
    return counts.min(axis=1)


def _search_directions(d: int, cfg: DepthMethodConfig) -> FloatArray:
    if d == 1:
        return np.array([[1.0], [-1.0]])
    return sample_unit_directions(cfg.n_directions, d, cfg.seed)


def tukey_depths(
    queries: npt.ArrayLike,
    data: Dataset,
    cfg: DepthMethodConfig,
    threads: int = 1,
) -> FloatArray:
    """Tukey depth ``min_u #{uᵀX <= uᵀv} / n`` at every query point.

    Exact for d = 2 (angular sweep, O(n log n) per query) and d = 1; for
    d > 2, or when ``cfg.exact_2d`` is off, the minimum runs over
    ``cfg.n_directions`` seeded directions and is an upper bound on the
    exact depth. Values are multiples of 1/n.
    """
    _check_cfg(cfg)
    qs = as_points(queries, data.d)
    values = data.values
    if data.d == 2 and cfg.exact_2d:  # noqa: PLR2004
        blocks = ordered_map(
            lambda s: np.array(
                [tukey_count_2d(q, values) for q in qs[s : s + _QUERY_BLOCK]],
                dtype=np.float64,
            ),
            range(0, qs.shape[0], _QUERY_BLOCK),
            threads,
        )
    else:
        directions = _search_directions(data.d, cfg)
        blocks = ordered_map(
            lambda s: _approximate_counts(qs[s : s + _QUERY_BLOCK], values, directions),
            range(0, qs.shape[0], _QUERY_BLOCK),
            threads,
        )
    if not blocks:
        return np.empty(0, dtype=np.float64)
    return np.concatenate(blocks) / data.n


def tukey_depth(v: npt.ArrayLike, data: Dataset, cfg: DepthMethodConfig) -> float:
    """Tukey depth of a single point.

    Examples:
        >>> corners = Dataset.from_array([[1, 1], [1, -1], [-1, 1], [-1, -1]])
        >>> tukey_depth([0, 0], corners, DepthMethodConfig("tukey"))
        0.5

    """
    return float(tukey_depths(as_vector(v, data.d), data, cfg)[0])
