"""Angular bookkeeping around a 2-D query point.

Polar angles only order the rays; whether two rays coincide, point in
opposite directions or lie within half a turn of each other is decided by
the signs of cross and dot products of the offsets ``p − v``, which are
exact on integer coordinates.
"""

from dataclasses import dataclass

import numpy as np

from depthkit.geometry import FloatArray, IntArray

TWO_PI = 2.0 * np.pi


def _cross(a: FloatArray, b: FloatArray) -> FloatArray:
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _dot(a: FloatArray, b: FloatArray) -> FloatArray:
    return a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1]


@dataclass(frozen=True)
class RaySweep:
    """Rays from ``v`` through the data, in counterclockwise order.

    ``counts[j]`` points lie on ray j, ``ahead[j]`` points lie strictly
    inside the open half-turn counterclockwise of ray j and ``opposite[j]``
    points lie on the ray pointing the other way. Points equal to ``v`` are
    only counted in ``coincident``.
    """

    counts: IntArray
    ahead: IntArray
    opposite: IntArray
    coincident: int

    @property
    def size(self) -> int:
        """Number of points distinct from ``v``."""
        return int(self.counts.sum())


def _ray_starts(offsets: FloatArray) -> IntArray:
    prev, cur = offsets[:-1], offsets[1:]
    same_ray = (_cross(prev, cur) == 0.0) & (_dot(prev, cur) > 0.0)
    return np.flatnonzero(np.concatenate([[True], ~same_ray])).astype(np.int64)


def ray_sweep(v: FloatArray, points: FloatArray) -> RaySweep:
    """Group the points around ``v`` into rays and count each ray's half-turn ahead."""
    # +0.0 folds -0.0 so arctan2 never splits a ray across ±π.
    diff = (points - v) + 0.0
    at_v = np.all(diff == 0.0, axis=1)
    coincident = int(at_v.sum())
    rest = diff[~at_v]
    if rest.shape[0] == 0:
        empty = np.zeros(0, dtype=np.int64)
        return RaySweep(empty, empty, empty, coincident)
    theta = np.arctan2(rest[:, 1], rest[:, 0])
    order = np.argsort(theta, kind="stable")
    rest, theta = rest[order], theta[order]
    starts = _ray_starts(rest)
    counts = np.diff(np.append(starts, rest.shape[0])).astype(np.int64)
    rays = rest[starts]
    phi = theta[starts]
    g = rays.shape[0]

    # First ray (in the doubled ring) not strictly inside the half-turn ahead.
    ring = np.concatenate([phi, phi + TWO_PI])
    own = np.arange(g)
    stop = np.clip(np.searchsorted(ring, phi + np.pi, side="left"), own + 1, own + g)
    while True:
        back = (stop > own + 1) & (_cross(rays, rays[(stop - 1) % g]) <= 0.0)
        forward = ~back & (stop < own + g) & (_cross(rays, rays[stop % g]) > 0.0)
        if not (back.any() or forward.any()):
            break
        stop = stop - back.astype(np.int64) + forward.astype(np.int64)

    cum = np.concatenate([[0], np.cumsum(np.concatenate([counts, counts]))])
    ahead = cum[stop] - cum[own + 1]
    boundary = rays[stop % g]
    is_opposite = (stop < own + g) & (_cross(rays, boundary) == 0.0) & (_dot(rays, boundary) < 0.0)
    opposite = np.where(is_opposite, counts[stop % g], 0).astype(np.int64)
    return RaySweep(counts, ahead.astype(np.int64), opposite, coincident)
