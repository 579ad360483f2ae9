"""Deterministic sampling from generator specifications."""

from __future__ import annotations

import logging

import numpy as np
from scipy import linalg

from depthkit.datagen.spec import (
    SKEW_NORMAL_MARGINAL,
    GaussianModel,
    GeneratorSpec,
    MarginalModel,
    MixtureModel,
    ProductModel,
    SkewNormalModel,
)
from depthkit.geometry import Dataset, FloatArray

logger = logging.getLogger(__name__)


def _gaussian(model: GaussianModel, n: int, rng: np.random.Generator) -> FloatArray:
    factor = linalg.cholesky(model.cov, lower=True)
    z = rng.standard_normal((n, model.d))
    return model.mean + z @ factor.T


def _mixture(model: MixtureModel, n: int, rng: np.random.Generator) -> FloatArray:
    # One categorical draw for all observations, then each component fills its rows in order.
    labels = rng.choice(len(model.components), size=n, p=np.asarray(model.weights))
    out = np.empty((n, model.d), dtype=np.float64)
    for c, component in enumerate(model.components):
        rows = labels == c
        count = int(rows.sum())
        if count:
            out[rows] = _gaussian(component, count, rng)
    return out


def _skew_normal_columns(shape: FloatArray, n: int, rng: np.random.Generator) -> FloatArray:
    delta = shape / np.sqrt(1.0 + shape**2)
    z0 = rng.standard_normal((n, shape.shape[0]))
    z1 = rng.standard_normal((n, shape.shape[0]))
    return delta * np.abs(z0) + np.sqrt(1.0 - delta**2) * z1


def _marginal(marginal: MarginalModel, n: int, rng: np.random.Generator) -> FloatArray:
    if marginal.kind == SKEW_NORMAL_MARGINAL:
        return _skew_normal_columns(np.asarray(marginal.params), n, rng)[:, 0]
    return marginal.density().sample(n, rng)


def _product(model: ProductModel, n: int, rng: np.random.Generator) -> FloatArray:
    return np.column_stack([_marginal(m, n, rng) for m in model.marginals])


def sample_values(spec: GeneratorSpec, seed: int | None = None) -> FloatArray:
    """Draw the n×d sample for ``spec`` from a PCG64 generator.

    Args:
        spec: Model, sample size and default seed.
        seed: Overrides ``spec.seed``; when both are None the seed is 0.

    """
    effective = seed if seed is not None else (spec.seed if spec.seed is not None else 0)
    rng = np.random.default_rng(effective)
    model = spec.model
    if isinstance(model, GaussianModel):
        values = _gaussian(model, spec.n, rng)
    elif isinstance(model, MixtureModel):
        values = _mixture(model, spec.n, rng)
    elif isinstance(model, SkewNormalModel):
        values = _skew_normal_columns(np.asarray(model.shape), spec.n, rng)
    else:
        values = _product(model, spec.n, rng)
    logger.debug("sampled %s model n=%d d=%d seed=%d", spec.kind.value, spec.n, spec.d, effective)
    return values


def generate(spec: GeneratorSpec, seed: int | None = None) -> Dataset:
    """Sample a Dataset; same spec and seed give bit-identical values."""
    return Dataset.from_array(sample_values(spec, seed))


def replicate_seed(base_seed: int, replicate: int) -> int:
    """Seed of replicate ``r`` (0-based) in a run rooted at ``base_seed``."""
    return base_seed + replicate
