"""Multivariate MMAD: Φ, 3MAD depth, central regions, shells and contour grids."""

from .contour import ContourGrid, FieldKind, contour_grid
from .depth import DepthVector, depth_3mad
from .methods import DEPTH_METHODS, MMAD_METHOD, DepthSettings, check_method, evaluate_depth
from .regions import (
    DEFAULT_SHELL_LEVELS,
    CentralRegion,
    ShellAssignment,
    central_region,
    central_region_from_scores,
    shell_assign,
    validate_levels,
)
from .scale import PhiMinimum, phi_minimizer, phi_scale, phi_scales

__all__ = [
    "DEFAULT_SHELL_LEVELS",
    "DEPTH_METHODS",
    "MMAD_METHOD",
    "CentralRegion",
    "ContourGrid",
    "DepthSettings",
    "DepthVector",
    "FieldKind",
    "PhiMinimum",
    "ShellAssignment",
    "central_region",
    "central_region_from_scores",
    "check_method",
    "contour_grid",
    "depth_3mad",
    "evaluate_depth",
    "phi_minimizer",
    "phi_scale",
    "phi_scales",
    "shell_assign",
    "validate_levels",
]
