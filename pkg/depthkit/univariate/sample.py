"""Empirical G(v) = Med|X − v| on a sorted 1-D sample, its depth and one-sided slopes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from depthkit.errors import InputError
from depthkit.geometry import FloatArray, exceedance_fraction, lower_order_statistic

# Upper bound on elements of one query×sample distance block.
_BLOCK_ELEMENTS = 4_000_000


@dataclass(frozen=True)
class UnivariateSample:
    """Finite 1-D sample stored sorted ascending (order statistics X_(1) … X_(n))."""

    values: FloatArray

    def __post_init__(self) -> None:
        """Sort, validate and freeze the sample."""
        arr = np.sort(np.asarray(self.values, dtype=np.float64).reshape(-1))
        if arr.shape[0] == 0:
            msg = "univariate sample is empty"
            raise InputError(msg)
        if not np.isfinite(arr).all():
            msg = "univariate sample contains non-finite values"
            raise InputError(msg)
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_values(cls, values: npt.ArrayLike) -> UnivariateSample:
        """Build a sample from any array-like of reals."""
        return cls(np.asarray(values, dtype=np.float64))

    @property
    def n(self) -> int:
        """Sample size."""
        return int(self.values.shape[0])


@dataclass(frozen=True)
class Subdifferential:
    """One-sided slopes of G at a point, as evaluated by the boundary-tail formulas.

    ``lower`` and ``upper`` follow the displayed tail-probability expressions
    literally. For continuous data they coincide; with atoms on the boundary
    points ``upper − lower = P̂(X = v − G) − P̂(X = v + G)``, so the pair is not
    ordered in general.
    """

    lower: float
    upper: float


def _g_many(values: FloatArray, queries: FloatArray) -> FloatArray:
    n = values.shape[0]
    k = math.ceil(n / 2)
    rows = max(1, _BLOCK_ELEMENTS // n)
    out = np.empty(queries.shape[0], dtype=np.float64)
    for start in range(0, queries.shape[0], rows):
        block = queries[start : start + rows]
        dist = np.abs(values[np.newaxis, :] - block[:, np.newaxis])
        out[start : start + rows] = lower_order_statistic(dist, k, axis=1)
    return out


def g_scale(v: float, s: UnivariateSample) -> float:
    """G(v): the ⌈n/2⌉-th order statistic of ``|X_i − v|``.

    Examples:
        >>> g_scale(3.0, UnivariateSample.from_values([1, 2, 3, 4, 5]))
        1.0
        >>> g_scale(0.0, UnivariateSample.from_values([1, 2, 3, 4]))
        2.0

    """
    return float(_g_many(s.values, np.array([v], dtype=np.float64))[0])


def g_scale_many(queries: npt.ArrayLike, s: UnivariateSample) -> FloatArray:
    """Vectorized :func:`g_scale` over many query points."""
    q = np.asarray(queries, dtype=np.float64).reshape(-1)
    if not np.isfinite(q).all():
        msg = "queries contain non-finite values"
        raise InputError(msg)
    return _g_many(s.values, q)


def depth_univariate(queries: npt.ArrayLike, s: UnivariateSample) -> FloatArray:
    """MMAD depth ``#{i : G(X_i) > G(v)} / n`` for each query v.

    Queries are ranked against the sample's own G values and never enter
    that reference distribution.
    """
    sample_g = _g_many(s.values, s.values)
    return exceedance_fraction(sample_g, g_scale_many(queries, s))


def g_subdifferential(v: float, s: UnivariateSample) -> Subdifferential:
    """Empirical one-sided slopes of G at ``v`` from weak-inequality tail fractions.

    ``lower = P̂(X ≥ v+G) − P̂(X ≤ v−G)`` and
    ``upper = P̂(X ≥ v−G) − P̂(X ≤ v+G)`` with ``G = g_scale(v, s)``.
    """
    g = g_scale(v, s)
    x = s.values
    left, right = v - g, v + g
    lower = float(np.mean(x >= right) - np.mean(x <= left))
    upper = float(np.mean(x >= left) - np.mean(x <= right))
    return Subdifferential(lower=lower, upper=upper)
