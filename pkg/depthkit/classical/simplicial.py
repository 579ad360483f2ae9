"""Simplicial depth: exact counts in 1-D and 2-D, random simplices otherwise."""

import logging
import math

import numpy as np
import numpy.typing as npt

from depthkit.classical._angles import ray_sweep
from depthkit.classical.config import ClassicalMethod, DepthMethodConfig
from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, as_points, as_vector
from depthkit.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

_QUERY_BLOCK = 256
_MIN_TRIANGLE_POINTS = 3


def simplicial_fraction_2d(v: FloatArray, points: FloatArray) -> float:
    """Fraction of data triangles whose closed hull contains ``v``.

    A triangle misses ``v`` exactly when its vertices fit in an open
    half-plane through ``v``. Counting those from their first vertex in
    angular order gives ``Σ C(k_i, 2)``, where ``k_i`` counts the later points
    on the same ray plus the points strictly less than π ahead; the rest
    contain ``v``, including triangles with ``v`` on an edge. Points equal to
    ``v`` do not form triangles; if fewer than three others remain the depth
    is 1 when ``v`` is itself a data point.
    """
    sweep = ray_sweep(v, points)
    m = sweep.size
    if m < _MIN_TRIANGLE_POINTS:
        return 1.0 if sweep.coincident else 0.0
    ray = np.repeat(np.arange(sweep.counts.shape[0]), sweep.counts)
    first = np.repeat(np.cumsum(sweep.counts) - sweep.counts, sweep.counts)
    later_on_ray = sweep.counts[ray] - 1 - (np.arange(m) - first)
    k = later_on_ray + sweep.ahead[ray]
    missing = int(np.sum(k * (k - 1) // 2))
    total = math.comb(m, 3)
    return (total - missing) / total


def _simplicial_1d(v: float, values: FloatArray) -> float:
    rest = values[values != v]
    m = rest.shape[0]
    if m < 2:  # noqa: PLR2004
        return 1.0 if rest.shape[0] < values.shape[0] else 0.0
    left = int(np.sum(rest < v))
    return left * (m - left) / math.comb(m, 2)


def _contains(simplices: FloatArray, v: FloatArray) -> npt.NDArray[np.bool_]:
    # Barycentric coordinates of v in each simplex (rows: d+1 vertices).
    base = simplices[:, 0, :]
    edges = simplices[:, 1:, :] - base[:, np.newaxis, :]
    rhs = v[np.newaxis, :] - base
    inside = np.zeros(simplices.shape[0], dtype=bool)
    dets = np.linalg.det(edges)
    ok = np.abs(dets) > 0.0
    if ok.any():
        lam = np.linalg.solve(np.transpose(edges[ok], (0, 2, 1)), rhs[ok][:, :, np.newaxis])[:, :, 0]
        inside[ok] = (lam >= 0.0).all(axis=1) & (lam.sum(axis=1) <= 1.0)
    return inside


def _random_simplices(data: Dataset, cfg: DepthMethodConfig) -> FloatArray:
    rng = np.random.default_rng(cfg.seed)
    picks = np.array(
        [rng.choice(data.n, size=data.d + 1, replace=False) for _ in range(cfg.n_directions)],
    )
    return data.values[picks]


def simplicial_depths(
    queries: npt.ArrayLike,
    data: Dataset,
    cfg: DepthMethodConfig,
    threads: int = 1,
) -> FloatArray:
    """Simplicial depth at every query point.

    Exact for d = 1 (segments) and d = 2 (angular-gap count, O(n log n) per
    query). With ``cfg.exact_2d`` off, or for d > 2, the fraction of
    ``cfg.n_directions`` seeded random simplices containing the point.

    Raises:
        InputError: If n < d + 1, the config is for another method, or exact
            mode is requested for d > 2.

    """
    if cfg.method is not ClassicalMethod.SIMPLICIAL:
        msg = f"simplicial depth called with a {cfg.method.value} config"
        raise InputError(msg)
    if data.n < data.d + 1:
        msg = f"simplicial depth needs n >= d + 1, got n={data.n}, d={data.d}"
        raise InputError(msg)
    qs = as_points(queries, data.d)
    values = data.values
    if data.d == 1:
        return np.array([_simplicial_1d(float(q[0]), values[:, 0]) for q in qs])
    if data.d > 2 and cfg.exact_2d:  # noqa: PLR2004
        msg = f"exact simplicial depth is only available for d <= 2 (got d={data.d}); set exact_2d to false"
        raise InputError(msg)
    if cfg.exact_2d:
        blocks = ordered_map(
            lambda s: np.array([simplicial_fraction_2d(q, values) for q in qs[s : s + _QUERY_BLOCK]]),
            range(0, qs.shape[0], _QUERY_BLOCK),
            threads,
        )
    else:
        simplices = _random_simplices(data, cfg)
        logger.debug("simplicial depth from %d random simplices", simplices.shape[0])
        blocks = ordered_map(
            lambda s: np.array([_contains(simplices, q).mean() for q in qs[s : s + _QUERY_BLOCK]]),
            range(0, qs.shape[0], _QUERY_BLOCK),
            threads,
        )
    if not blocks:
        return np.empty(0, dtype=np.float64)
    return np.concatenate(blocks).astype(np.float64)


def simplicial_depth(v: npt.ArrayLike, data: Dataset, cfg: DepthMethodConfig) -> float:
    """Simplicial depth of a single point.

    Examples:
        >>> tri = Dataset.from_array([[0, 0], [2, 0], [0, 2]])
        >>> simplicial_depth([0.5, 0.5], tri, DepthMethodConfig("simplicial"))
        1.0

    """
    return float(simplicial_depths(as_vector(v, data.d), data, cfg)[0])
