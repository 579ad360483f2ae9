"""Lower empirical quantiles and strict-exceedance ranking.

Every quantile in depthkit is the ⌈αn⌉-th order statistic (the inf-based
definition); medians are the ⌈n/2⌉-th. Selection uses ``np.partition`` so no
full sort is needed.
"""

import math

import numpy as np
import numpy.typing as npt

from depthkit.errors import InputError
from depthkit.geometry.dataset import FloatArray


def validate_level(alpha: float, what: str = "alpha") -> float:
    """Return ``alpha`` if it lies strictly inside (0, 1)."""
    if not (0.0 < alpha < 1.0) or not math.isfinite(alpha):
        msg = f"{what} must lie strictly between 0 and 1, got {alpha}"
        raise InputError(msg)
    return float(alpha)


def order_index(alpha: float, n: int) -> int:
    """1-based rank ⌈α·n⌉ of the lower empirical α-quantile, clamped to [1, n].

    The product is rounded to 9 decimals first so that e.g. 0.05·500 selects
    the 25th order statistic rather than the 26th.
    """
    return min(n, max(1, math.ceil(round(alpha * n, 9))))


def lower_order_statistic(
    values: npt.ArrayLike,
    k: int,
    axis: int = -1,
) -> FloatArray:
    """k-th smallest value (1-based) along ``axis`` via selection."""
    arr = np.asarray(values, dtype=np.float64)
    size = arr.shape[axis]
    if not 1 <= k <= size:
        msg = f"order statistic {k} out of range for {size} values"
        raise InputError(msg)
    return np.take(np.partition(arr, k - 1, axis=axis), k - 1, axis=axis)


def lower_median(values: npt.ArrayLike, axis: int = -1) -> FloatArray:
    """The ⌈n/2⌉-th order statistic along ``axis``."""
    arr = np.asarray(values, dtype=np.float64)
    return lower_order_statistic(arr, math.ceil(arr.shape[axis] / 2), axis=axis)


def lower_quantile(values: npt.ArrayLike, alpha: float) -> float:
    """The ⌈α·n⌉-th order statistic of a flat sample."""
    arr = np.asarray(values, dtype=np.float64).reshape(-1)
    return float(lower_order_statistic(arr, order_index(alpha, arr.shape[0])))


def coordinatewise_median(values: npt.ArrayLike) -> FloatArray:
    """Lower median of each column of an n×d matrix."""
    return lower_median(np.asarray(values, dtype=np.float64), axis=0)


def exceedance_fraction(reference: npt.ArrayLike, queries: npt.ArrayLike) -> FloatArray:
    """For each query q, ``#{r in reference : r > q} / n``.

    This is the strict-greater depth rank: tied reference values share a
    depth and never count against each other.
    """
    ref = np.sort(np.asarray(reference, dtype=np.float64).reshape(-1))
    q = np.asarray(queries, dtype=np.float64)
    n = ref.shape[0]
    if n == 0:
        msg = "reference sample is empty"
        raise InputError(msg)
    above = n - np.searchsorted(ref, q, side="right")
    return above.astype(np.float64) / n
