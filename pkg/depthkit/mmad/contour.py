"""Φ and depth fields on a regular 2-D grid, for contour plots."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import StrEnum

import numpy as np

from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric
from depthkit.mmad.methods import MMAD_METHOD, DepthSettings, check_method, evaluate_depth
from depthkit.mmad.scale import phi_scales

_MIN_RESOLUTION = 2


class FieldKind(StrEnum):
    """What a grid holds."""

    SCALE = "scale"
    DEPTH = "depth"


@dataclass(frozen=True)
class ContourGrid:
    """Field values on the nodes of ``x_axis × y_axis``.

    ``values[j, i]`` belongs to node ``(x_axis[i], y_axis[j])``; flattening
    in C order gives the y-major node order used for CSV output.
    """

    x_axis: FloatArray
    y_axis: FloatArray
    values: FloatArray
    field_kind: FieldKind
    metric_name: str
    method: str = MMAD_METHOD

    def nodes(self) -> FloatArray:
        """Grid nodes as an (ny·nx)×2 array, y-major."""
        xx, yy = np.meshgrid(self.x_axis, self.y_axis)
        return np.column_stack([xx.ravel(), yy.ravel()])

    def rows(self) -> FloatArray:
        """(x, y, value) triples in y-major order."""
        return np.column_stack([self.nodes(), self.values.ravel()])


def _check_bounds(bounds: tuple[float, float, float, float]) -> None:
    xmin, xmax, ymin, ymax = bounds
    if not np.isfinite(bounds).all() or xmin >= xmax or ymin >= ymax:
        msg = f"bounds must be finite with xmin < xmax and ymin < ymax, got {bounds}"
        raise InputError(msg)


def contour_grid(  # noqa: PLR0913
    data: Dataset,
    m: Metric,
    bounds: tuple[float, float, float, float],
    resolution: tuple[int, int],
    field_kind: FieldKind | str = FieldKind.SCALE,
    method: str = MMAD_METHOD,
    settings: DepthSettings | None = None,
) -> ContourGrid:
    """Evaluate Φ (``scale``) or a depth (``depth``) at every grid node.

    Args:
        data: Two-dimensional sample.
        m: Metric for Φ and 3MAD depth.
        bounds: ``(xmin, xmax, ymin, ymax)``.
        resolution: ``(nx, ny)``, each at least 2.
        field_kind: ``scale`` (3MAD only) or ``depth``.
        method: Depth method for ``depth`` fields.
        settings: Direction counts, seed and threads for classical methods.

    Raises:
        InputError: If d != 2, the resolution is below 2×2, the bounds are
            empty, or a scale field is requested for a classical method.

    """
    if data.d != 2:  # noqa: PLR2004
        msg = f"contour grids need 2-dimensional data, got d={data.d}"
        raise InputError(msg)
    nx, ny = resolution
    if nx < _MIN_RESOLUTION or ny < _MIN_RESOLUTION:
        msg = f"resolution must be at least 2x2, got {nx}x{ny}"
        raise InputError(msg)
    _check_bounds(bounds)
    try:
        kind = FieldKind(field_kind)
    except ValueError:
        msg = f"field must be scale or depth, got {field_kind!r}"
        raise InputError(msg) from None
    name = check_method(method)
    if kind is FieldKind.SCALE and name != MMAD_METHOD:
        msg = f"scale fields exist only for 3mad, not {name}"
        raise InputError(msg)
    settings = replace(settings, metric=m) if settings is not None else DepthSettings(metric=m)
    x_axis = np.linspace(bounds[0], bounds[1], nx)
    y_axis = np.linspace(bounds[2], bounds[3], ny)
    grid = ContourGrid(x_axis, y_axis, np.empty((ny, nx)), kind, settings.metric.name, name)
    nodes = grid.nodes()
    if kind is FieldKind.SCALE:
        flat = phi_scales(nodes, data, settings.metric, settings.threads)
    else:
        flat = evaluate_depth(name, data, settings, nodes)
    return ContourGrid(x_axis, y_axis, flat.reshape(ny, nx), kind, settings.metric.name, name)
