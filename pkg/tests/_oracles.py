"""Brute-force reference implementations for the exact 2-D depths.

Both use only sign tests on cross and dot products, so they are exact on
integer coordinates, including collinear and repeated points.
"""

from __future__ import annotations

import itertools

import numpy as np


def _cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def tukey_count_brute_force(v: np.ndarray, points: np.ndarray) -> int:
    """Min over closed halfplanes through v, O(n²).

    For every line through v and a data point, take either closed side and
    the two slight rotations of it, which move the points on the line ahead
    of or behind v out of the halfplane.
    """
    diff = points - v
    at_v = np.all(diff == 0.0, axis=1)
    coincident = int(at_v.sum())
    rest = diff[~at_v]
    if rest.shape[0] == 0:
        return coincident
    best = rest.shape[0]
    for p in rest:
        side = _cross(p, rest)
        along = rest @ p
        on_line = side == 0.0
        for strict in (side > 0.0, side < 0.0):
            for keep in (on_line, on_line & (along > 0.0), on_line & (along < 0.0)):
                best = min(best, int(np.sum(strict | keep)))
    return coincident + best


def _orientation(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    return float((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _on_segment(a: np.ndarray, b: np.ndarray, v: np.ndarray) -> bool:
    return (
        _orientation(a, b, v) == 0.0
        and min(a[0], b[0]) <= v[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= v[1] <= max(a[1], b[1])
    )


def simplicial_count_brute_force(v: np.ndarray, points: np.ndarray) -> tuple[int, int]:
    """(closed triangles containing v, total triangles) over points distinct from v."""
    rest = points[~np.all(points == v, axis=1)]
    inside = 0
    total = 0
    for a, b, c in itertools.combinations(rest, 3):
        total += 1
        if _orientation(a, b, c) == 0.0:
            inside += int(_on_segment(a, b, v) or _on_segment(b, c, v) or _on_segment(c, a, v))
            continue
        signs = (_orientation(a, b, v), _orientation(b, c, v), _orientation(c, a, v))
        if all(s >= 0 for s in signs) or all(s <= 0 for s in signs):
            inside += 1
    return inside, total
