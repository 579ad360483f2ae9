"""Seeded uniform directions on the unit sphere."""

import numpy as np

from depthkit.errors import InputError
from depthkit.geometry.dataset import FloatArray


def sample_unit_directions(k: int, d: int, seed: int) -> FloatArray:
    """Draw ``k`` directions uniformly on S^{d−1} by normalizing Gaussians.

    Args:
        k: Number of directions (>= 1).
        d: Dimension (>= 1).
        seed: Seed for a PCG64 generator; equal seeds give equal directions.

    Returns:
        k×d array whose rows have Euclidean norm 1.

    """
    if k < 1 or d < 1:
        msg = f"need k >= 1 and d >= 1, got k={k}, d={d}"
        raise InputError(msg)
    rng = np.random.default_rng(seed)
    draws = rng.standard_normal((k, d))
    norms = np.linalg.norm(draws, axis=1)
    # An exactly-zero Gaussian row has probability zero; redraw it anyway.
    zero = norms == 0.0
    while zero.any():
        draws[zero] = rng.standard_normal((int(zero.sum()), d))
        norms = np.linalg.norm(draws, axis=1)
        zero = norms == 0.0
    return draws / norms[:, np.newaxis]


def coordinate_axes(d: int) -> FloatArray:
    """The 2d signed coordinate axes ±e_j, positive axes first."""
    eye = np.eye(d, dtype=np.float64)
    return np.concatenate([eye, -eye], axis=0)
