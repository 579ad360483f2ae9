"""Named models used by the bundled experiments and ``depthkit simulate``."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from depthkit.datagen.spec import (
    GaussianModel,
    GeneratorSpec,
    MarginalModel,
    MixtureModel,
    ProductModel,
    SkewNormalModel,
)
from depthkit.errors import InputError


def _normal(mean: list[float], cov: list[list[float]]) -> GaussianModel:
    return GaussianModel(np.asarray(mean, dtype=np.float64), np.asarray(cov, dtype=np.float64))


def _isotropic(mean: list[float], variance: float = 1.0) -> GaussianModel:
    return _normal(mean, (variance * np.eye(len(mean))).tolist())


def _shells_mixture() -> GeneratorSpec:
    return GeneratorSpec(MixtureModel((0.5, 0.5), (_isotropic([0, 0]), _isotropic([3, 3]))), n=500)


def _table_elliptical() -> GeneratorSpec:
    return GeneratorSpec(_isotropic([0, 0], 0.7), n=200)


def _table_mixture() -> GeneratorSpec:
    components = (
        _isotropic([0, 0]),
        _normal([3, 1], [[1.0, 0.0], [0.0, 0.3]]),
        _isotropic([-5, 3]),
    )
    return GeneratorSpec(MixtureModel((0.7, 0.2, 0.1), components), n=200)


def _contour_elliptical() -> GeneratorSpec:
    return GeneratorSpec(_isotropic([0, 0], 0.6), n=200)


def _contour_bimodal() -> GeneratorSpec:
    return GeneratorSpec(MixtureModel((0.5, 0.5), (_isotropic([-2, -2]), _isotropic([2, 2]))), n=300)


def _overlap_elliptical() -> GeneratorSpec:
    return GeneratorSpec(_normal([0, 0], [[1.0, 0.7], [0.7, 1.0]]), n=1000)


def _overlap_skew() -> GeneratorSpec:
    return GeneratorSpec(SkewNormalModel((5.0, 0.0)), n=3000)


def _boundary_symmetric() -> GeneratorSpec:
    return GeneratorSpec(_isotropic([0, 0]), n=1000)


def _boundary_skewed() -> GeneratorSpec:
    marginals = (MarginalModel("exponential", (1.0,)), MarginalModel("normal", (0.0, 1.0)))
    return GeneratorSpec(ProductModel(marginals), n=1000)


PRESETS: dict[str, Callable[[], GeneratorSpec]] = {
    "shells-mixture": _shells_mixture,
    "table1-elliptical": _table_elliptical,
    "table1-mixture": _table_mixture,
    "contour-elliptical": _contour_elliptical,
    "contour-bimodal": _contour_bimodal,
    "overlap-elliptical": _overlap_elliptical,
    "overlap-skew": _overlap_skew,
    "boundary-symmetric": _boundary_symmetric,
    "boundary-skewed": _boundary_skewed,
}


def preset(name: str, n: int | None = None, seed: int | None = None) -> GeneratorSpec:
    """Look up a named model, optionally overriding its sample size and seed.

    Raises:
        InputError: If the name is unknown.

    """
    factory = PRESETS.get(name)
    if factory is None:
        msg = f"unknown preset {name!r}; choose one of {', '.join(sorted(PRESETS))}"
        raise InputError(msg)
    spec = factory()
    if n is not None:
        spec = spec.with_n(n)
    if seed is not None:
        spec = spec.with_seed(seed)
    return spec
