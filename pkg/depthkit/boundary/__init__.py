"""Boundary shells, directional derivatives, the resultant vector and μ_v."""

from .center import CenterRule, locate_center, parse_center_rule
from .measure import AngularMeasure, angular_measure, directional_derivative, gradient
from .shell import (
    DEFAULT_MIN_MEMBERS,
    DEFAULT_SHELL_FRACTION,
    BoundaryShell,
    ShellPolicy,
    extract_boundary_shell,
)

__all__ = [
    "DEFAULT_MIN_MEMBERS",
    "DEFAULT_SHELL_FRACTION",
    "AngularMeasure",
    "BoundaryShell",
    "CenterRule",
    "ShellPolicy",
    "angular_measure",
    "directional_derivative",
    "extract_boundary_shell",
    "gradient",
    "locate_center",
    "parse_center_rule",
]
