"""One entry point for the five depth functions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from depthkit.classical import (
    ClassicalMethod,
    DepthMethodConfig,
    projection_depths,
    simplicial_depths,
    spatial_depths,
    tukey_depths,
)
from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric
from depthkit.mmad.depth import depth_3mad

MMAD_METHOD = "3mad"
DEPTH_METHODS: tuple[str, ...] = (MMAD_METHOD, *(m.value for m in ClassicalMethod))


@dataclass(frozen=True)
class DepthSettings:
    """Everything a depth evaluation may need besides the data.

    Attributes:
        metric: Geometry for 3MAD (other methods ignore it); L2 by default.
        n_directions: Direction / simplex count for the randomized methods.
        seed: Seed for the randomized methods.
        exact_2d: Use exact 2-D sweeps for Tukey and simplicial depth.
        threads: Worker count.

    """

    metric: Metric = field(default_factory=Metric.l2)
    n_directions: int = 1000
    seed: int = 0
    exact_2d: bool = True
    threads: int = 1

    def classical(self, method: str) -> DepthMethodConfig:
        """Config for one of the classical methods."""
        return DepthMethodConfig(
            ClassicalMethod(method),
            n_directions=self.n_directions,
            seed=self.seed,
            exact_2d=self.exact_2d,
        )


def check_method(method: str) -> str:
    """Return the lower-cased method name if it is known."""
    name = method.lower()
    if name not in DEPTH_METHODS:
        msg = f"unknown depth method {method!r}; choose one of {', '.join(DEPTH_METHODS)}"
        raise InputError(msg)
    return name


def evaluate_depth(
    method: str,
    data: Dataset,
    settings: DepthSettings,
    queries: npt.ArrayLike | None = None,
) -> FloatArray:
    """Depth of each query (default: each observation) under ``method``."""
    name = check_method(method)
    points = data.values if queries is None else np.asarray(queries, dtype=np.float64)
    if name == MMAD_METHOD:
        dv = depth_3mad(data, settings.metric, None if queries is None else points, settings.threads)
        return dv.depth if queries is None else dv.query_depth
    if name == ClassicalMethod.SPATIAL.value:
        return spatial_depths(points, data, settings.threads)
    cfg = settings.classical(name)
    if name == ClassicalMethod.TUKEY.value:
        return tukey_depths(points, data, cfg, settings.threads)
    if name == ClassicalMethod.SIMPLICIAL.value:
        return simplicial_depths(points, data, cfg, settings.threads)
    return projection_depths(points, data, cfg, settings.threads)
