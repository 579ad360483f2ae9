"""Φ(v) = Med‖X − v‖ and its minimizer."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy import optimize

from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric, as_points, as_vector, lower_order_statistic


def _median_rank(n: int) -> int:
    return math.ceil(n / 2)


def phi_scales(
    points: npt.ArrayLike,
    data: Dataset,
    m: Metric,
    threads: int = 1,
) -> FloatArray:
    """Φ at every row of ``points``: the ⌈n/2⌉-th smallest distance to the sample.

    Distances are reduced block by block with a selection, so evaluating Φ
    at all n sample points costs O(n²d) time and O(n) extra memory per
    block row.
    """
    m.check_dimension(data.d)
    qs = as_points(points, data.d, "points")
    k = _median_rank(data.n)
    return m.reduce_rows(
        qs,
        data.values,
        lambda block: lower_order_statistic(block, k, axis=1),
        threads,
    )


def phi_scale(v: npt.ArrayLike, data: Dataset, m: Metric) -> float:
    """Φ(v) for a single location.

    Examples:
        >>> plus = Dataset.from_array([[0, 0], [1, 0], [0, 1], [-1, 0], [0, -1]])
        >>> phi_scale([0, 0], plus, Metric.l2())
        1.0

    Raises:
        InputError: If ``v`` does not have the dataset's dimension.

    """
    return float(phi_scales(as_vector(v, data.d), data, m)[0])


@dataclass(frozen=True)
class PhiMinimum:
    """Location of the smallest Φ found and its value.

    Attributes:
        location: Minimizing d-vector.
        value: Φ at ``location``.
        start_index: Sample row the search started from (smallest sample Φ).

    """

    location: FloatArray
    value: float
    start_index: int


def phi_minimizer(data: Dataset, m: Metric, threads: int = 1) -> PhiMinimum:
    """Locate a minimizer of Φ.

    Starts at the sample point with the smallest Φ and refines with
    Nelder-Mead (Φ is Lipschitz but not smooth). The result is never worse
    than the starting sample point.
    """
    if data.n < 2:  # noqa: PLR2004
        msg = f"need at least 2 observations to locate a minimizer, got {data.n}"
        raise InputError(msg)
    sample_phi = phi_scales(data.values, data, m, threads)
    start = int(np.argmin(sample_phi))
    x0 = data.values[start].copy()
    spread = np.std(data.values, axis=0)
    steps = np.where(spread > 0.0, 0.1 * spread, 0.1)
    simplex = np.vstack([x0, x0 + np.diag(steps)])
    result = optimize.minimize(
        lambda x: phi_scale(x, data, m),
        x0,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "xatol": 1e-8 * float(np.max(steps)),
            "fatol": 1e-12,
            "maxiter": 400 * data.d,
        },
    )
    best = float(result.fun)
    if best < float(sample_phi[start]):
        return PhiMinimum(np.asarray(result.x, dtype=np.float64), best, start)
    return PhiMinimum(x0, float(sample_phi[start]), start)
