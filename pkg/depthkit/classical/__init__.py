"""Tukey, simplicial, spatial and projection depths."""

from .config import ClassicalMethod, DepthMethodConfig
from .projection import ProjectionModel, projection_depth, projection_depths
from .simplicial import simplicial_depth, simplicial_depths, simplicial_fraction_2d
from .spatial import spatial_depth, spatial_depths
from .tukey import tukey_count_2d, tukey_depth, tukey_depths

__all__ = [
    "ClassicalMethod",
    "DepthMethodConfig",
    "ProjectionModel",
    "projection_depth",
    "projection_depths",
    "simplicial_depth",
    "simplicial_depths",
    "simplicial_fraction_2d",
    "spatial_depth",
    "spatial_depths",
    "tukey_count_2d",
    "tukey_depth",
    "tukey_depths",
]
