"""One-dimensional MMAD: G(v), its depth, slopes and boundary mass balance."""

from .density import DensityKind, DensityModel
from .population import (
    boundary_mass_balance,
    g_derivative,
    g_scale_population,
    g_subdifferential_population,
)
from .sample import (
    Subdifferential,
    UnivariateSample,
    depth_univariate,
    g_scale,
    g_scale_many,
    g_subdifferential,
)

__all__ = [
    "DensityKind",
    "DensityModel",
    "Subdifferential",
    "UnivariateSample",
    "boundary_mass_balance",
    "depth_univariate",
    "g_derivative",
    "g_scale",
    "g_scale_many",
    "g_scale_population",
    "g_subdifferential",
    "g_subdifferential_population",
]
