"""Seeded synthetic data: Gaussian, mixture, skew-normal and product models."""

from .generate import generate, replicate_seed, sample_values
from .presets import PRESETS, preset
from .spec import (
    GaussianModel,
    GeneratorKind,
    GeneratorSpec,
    MarginalModel,
    MixtureModel,
    ProductModel,
    SkewNormalModel,
    load_generator_spec,
    parse_generator_spec,
    spec_to_dict,
)

__all__ = [
    "PRESETS",
    "GaussianModel",
    "GeneratorKind",
    "GeneratorSpec",
    "MarginalModel",
    "MixtureModel",
    "ProductModel",
    "SkewNormalModel",
    "generate",
    "load_generator_spec",
    "parse_generator_spec",
    "preset",
    "replicate_seed",
    "sample_values",
    "spec_to_dict",
]
