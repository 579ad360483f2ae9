"""Spatial (spatial-sign) depth."""

import numpy as np
import numpy.typing as npt

from depthkit.geometry import Dataset, FloatArray, as_points, as_vector
from depthkit.utils.parallel import ordered_map

_BLOCK_ELEMENTS = 2_000_000


def _block_spatial(queries: FloatArray, values: FloatArray) -> FloatArray:
    diff = values[np.newaxis, :, :] - queries[:, np.newaxis, :]
    norms = np.sqrt(np.einsum("knd,knd->kn", diff, diff))
    # Points equal to the query contribute the zero vector.
    safe = np.where(norms > 0.0, norms, 1.0)
    signs = diff / safe[:, :, np.newaxis]
    signs[norms == 0.0] = 0.0
    mean_sign = signs.sum(axis=1) / values.shape[0]
    return 1.0 - np.linalg.norm(mean_sign, axis=1)


def spatial_depths(
    queries: npt.ArrayLike,
    data: Dataset,
    threads: int = 1,
) -> FloatArray:
    """``1 − ‖mean_i (X_i − v)/‖X_i − v‖‖`` at every query point.

    The mean runs over all n observations, with points equal to ``v``
    contributing zero; if every point equals ``v`` the depth is 1.
    """
    qs = as_points(queries, data.d)
    values = data.values
    rows = max(1, _BLOCK_ELEMENTS // (data.n * data.d))
    blocks = ordered_map(
        lambda s: _block_spatial(qs[s : s + rows], values),
        range(0, qs.shape[0], rows),
        threads,
    )
    if not blocks:
        return np.empty(0, dtype=np.float64)
    return np.clip(np.concatenate(blocks), 0.0, 1.0)


def spatial_depth(v: npt.ArrayLike, data: Dataset) -> float:
    """Spatial depth of a single point.

    Examples:
        >>> spatial_depth([0, 0], Dataset.from_array([[-1, 0], [1, 0]]))
        1.0

    """
    return float(spatial_depths(as_vector(v, data.d), data)[0])
