"""Typed generator specifications and their JSON/YAML form."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, replace
from enum import StrEnum
from pathlib import Path
from typing import cast

import numpy as np
from omegaconf import DictConfig, OmegaConf

from depthkit.errors import DegenerateCovarianceError, InputError
from depthkit.geometry import FloatArray, validate_spd
from depthkit.univariate import DensityKind, DensityModel

_WEIGHT_TOLERANCE = 1e-12


class GeneratorKind(StrEnum):
    """Model families."""

    GAUSSIAN = "gaussian"
    MIXTURE = "mixture"
    SKEW_NORMAL = "skew_normal"
    PRODUCT = "product"


def _float_tuple(raw: object, what: str) -> tuple[float, ...]:
    if not isinstance(raw, Sequence) or isinstance(raw, str):
        msg = f"{what} must be a list of numbers"
        raise InputError(msg)
    try:
        return tuple(float(x) for x in cast("Sequence[object]", raw))  # type: ignore[arg-type]
    except (TypeError, ValueError):
        msg = f"{what} must be a list of numbers, got {raw!r}"
        raise InputError(msg) from None


@dataclass(frozen=True)
class GaussianModel:
    """N_d(mean, cov)."""

    mean: FloatArray
    cov: FloatArray

    def __post_init__(self) -> None:
        """Check dimensions and that cov is SPD."""
        mean = np.asarray(self.mean, dtype=np.float64).reshape(-1)
        try:
            cov = validate_spd(np.atleast_2d(np.asarray(self.cov, dtype=np.float64)), "covariance")
        except DegenerateCovarianceError as e:
            raise InputError(str(e)) from None
        if cov.shape[0] != mean.shape[0]:
            msg = f"mean has dimension {mean.shape[0]} but covariance is {cov.shape[0]}x{cov.shape[1]}"
            raise InputError(msg)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def d(self) -> int:
        """Dimension."""
        return int(self.mean.shape[0])

    @classmethod
    def parse(cls, raw: Mapping[str, object]) -> GaussianModel:
        """Build from ``{"mean": [...], "cov": [[...], ...]}``."""
        if "mean" not in raw or "cov" not in raw:
            msg = "gaussian parameters need 'mean' and 'cov'"
            raise InputError(msg)
        try:
            cov = np.asarray(raw["cov"], dtype=np.float64)
        except (TypeError, ValueError):
            msg = f"cov must be a numeric matrix, got {raw['cov']!r}"
            raise InputError(msg) from None
        return cls(np.asarray(_float_tuple(raw["mean"], "mean")), cov)


@dataclass(frozen=True)
class MixtureModel:
    """Finite Gaussian mixture."""

    weights: tuple[float, ...]
    components: tuple[GaussianModel, ...]

    def __post_init__(self) -> None:
        """Weights positive, summing to 1, one per component, components of equal dimension."""
        if not self.components or len(self.weights) != len(self.components):
            msg = f"mixture needs one weight per component, got {len(self.weights)} weights and {len(self.components)} components"
            raise InputError(msg)
        if any(w <= 0 for w in self.weights):
            msg = f"mixture weights must be positive, got {list(self.weights)}"
            raise InputError(msg)
        if abs(sum(self.weights) - 1.0) > _WEIGHT_TOLERANCE:
            msg = f"mixture weights must sum to 1, got {sum(self.weights)!r}"
            raise InputError(msg)
        if len({c.d for c in self.components}) != 1:
            msg = "mixture components must share one dimension"
            raise InputError(msg)

    @property
    def d(self) -> int:
        """Dimension."""
        return self.components[0].d


@dataclass(frozen=True)
class SkewNormalModel:
    """Independent standard skew-normal coordinates with shapes α_j."""

    shape: tuple[float, ...]

    def __post_init__(self) -> None:
        """At least one finite shape parameter."""
        if not self.shape or not np.isfinite(self.shape).all():
            msg = f"skew_normal needs finite shape parameters, got {list(self.shape)}"
            raise InputError(msg)

    @property
    def d(self) -> int:
        """Dimension."""
        return len(self.shape)


SKEW_NORMAL_MARGINAL = "skew_normal"


@dataclass(frozen=True)
class MarginalModel:
    """One coordinate of a product model: a reference density or a skew-normal."""

    kind: str
    params: tuple[float, ...]

    def __post_init__(self) -> None:
        """Validate by building the underlying model once."""
        if self.kind == SKEW_NORMAL_MARGINAL:
            SkewNormalModel(self.params)
            if len(self.params) != 1:
                msg = "skew_normal marginal takes exactly one shape parameter"
                raise InputError(msg)
        else:
            self.density()

    def density(self) -> DensityModel:
        """The reference density for non-skew marginals."""
        try:
            kind = DensityKind(self.kind)
        except ValueError:
            msg = f"unknown marginal {self.kind!r}"
            raise InputError(msg) from None
        return DensityModel(kind, self.params)


@dataclass(frozen=True)
class ProductModel:
    """Independent coordinates with their own marginals."""

    marginals: tuple[MarginalModel, ...]

    def __post_init__(self) -> None:
        """At least one marginal."""
        if not self.marginals:
            msg = "product model needs at least one marginal"
            raise InputError(msg)

    @property
    def d(self) -> int:
        """Dimension."""
        return len(self.marginals)


Model = GaussianModel | MixtureModel | SkewNormalModel | ProductModel


@dataclass(frozen=True)
class GeneratorSpec:
    """A model plus sample size and seed.

    Attributes:
        model: What to sample.
        n: Sample size (>= 1).
        seed: PCG64 seed, or None to defer to the caller's seed.

    """

    model: Model
    n: int
    seed: int | None = None

    def __post_init__(self) -> None:
        """Validate n and seed."""
        if self.n < 1:
            msg = f"sample size must be >= 1, got {self.n}"
            raise InputError(msg)
        if self.seed is not None and self.seed < 0:
            msg = f"seed must be non-negative, got {self.seed}"
            raise InputError(msg)

    @property
    def kind(self) -> GeneratorKind:
        """Family of the model."""
        kinds: dict[type, GeneratorKind] = {
            GaussianModel: GeneratorKind.GAUSSIAN,
            MixtureModel: GeneratorKind.MIXTURE,
            SkewNormalModel: GeneratorKind.SKEW_NORMAL,
            ProductModel: GeneratorKind.PRODUCT,
        }
        return kinds[type(self.model)]

    @property
    def d(self) -> int:
        """Dimension of generated data."""
        return self.model.d

    def with_seed(self, seed: int) -> GeneratorSpec:
        """Copy with another seed."""
        return replace(self, seed=seed)

    def with_n(self, n: int) -> GeneratorSpec:
        """Copy with another sample size."""
        return replace(self, n=n)


def _mapping(raw: object, what: str) -> Mapping[str, object]:
    if not isinstance(raw, Mapping):
        msg = f"{what} must be a mapping"
        raise InputError(msg)
    return cast("Mapping[str, object]", raw)


def _parse_model(kind: GeneratorKind, params: Mapping[str, object]) -> Model:
    if kind is GeneratorKind.GAUSSIAN:
        return GaussianModel.parse(params)
    if kind is GeneratorKind.MIXTURE:
        raw_components = params.get("components")
        if not isinstance(raw_components, Sequence) or isinstance(raw_components, str):
            msg = "mixture parameters need a 'components' list"
            raise InputError(msg)
        components = tuple(
            GaussianModel.parse(_mapping(c, "mixture component"))
            for c in cast("Sequence[object]", raw_components)
        )
        return MixtureModel(_float_tuple(params.get("weights"), "weights"), components)
    if kind is GeneratorKind.SKEW_NORMAL:
        return SkewNormalModel(_float_tuple(params.get("shape"), "shape"))
    raw_marginals = params.get("marginals")
    if not isinstance(raw_marginals, Sequence) or isinstance(raw_marginals, str):
        msg = "product parameters need a 'marginals' list"
        raise InputError(msg)
    marginals: list[MarginalModel] = []
    for raw in cast("Sequence[object]", raw_marginals):
        entry = _mapping(raw, "marginal")
        marginals.append(
            MarginalModel(str(entry.get("kind", "")), _float_tuple(entry.get("params", []), "marginal params")),
        )
    return ProductModel(tuple(marginals))


def parse_generator_spec(raw: Mapping[str, object]) -> GeneratorSpec:
    """Validate a ``{"kind", "params", "n", "seed"}`` document into a GeneratorSpec.

    Raises:
        InputError: On unknown kinds, missing fields or invalid parameters.

    """
    try:
        kind = GeneratorKind(str(raw.get("kind", "")))
    except ValueError:
        choices = ", ".join(k.value for k in GeneratorKind)
        msg = f"unknown generator kind {raw.get('kind')!r}; choose one of {choices}"
        raise InputError(msg) from None
    model = _parse_model(kind, _mapping(raw.get("params", {}), "params"))
    n_raw = raw.get("n")
    seed_raw = raw.get("seed")
    if not isinstance(n_raw, int) or isinstance(n_raw, bool):
        msg = f"generator spec needs an integer 'n', got {n_raw!r}"
        raise InputError(msg)
    if seed_raw is not None and (not isinstance(seed_raw, int) or isinstance(seed_raw, bool)):
        msg = f"seed must be an integer, got {seed_raw!r}"
        raise InputError(msg)
    return GeneratorSpec(model, n_raw, seed_raw)


def load_generator_spec(path: Path) -> GeneratorSpec:
    """Load a JSON or YAML generator document through OmegaConf.

    Raises:
        FileNotFoundError: If the file does not exist.
        InputError: If it is not a mapping or fails validation.

    """
    if not path.exists():
        msg = f"generator spec not found: {path}"
        raise FileNotFoundError(msg)
    loaded: object = OmegaConf.load(path)
    if not isinstance(loaded, DictConfig):
        msg = f"generator spec must contain a mapping, got {type(loaded).__name__}"
        raise InputError(msg)
    container = OmegaConf.to_container(loaded, resolve=True)
    return parse_generator_spec(_mapping(container, "generator spec"))


def spec_to_dict(spec: GeneratorSpec) -> dict[str, object]:
    """Inverse of :func:`parse_generator_spec`, for manifests."""
    model = spec.model
    params: dict[str, object]
    if isinstance(model, GaussianModel):
        params = {"mean": model.mean.tolist(), "cov": model.cov.tolist()}
    elif isinstance(model, MixtureModel):
        params = {
            "weights": list(model.weights),
            "components": [{"mean": c.mean.tolist(), "cov": c.cov.tolist()} for c in model.components],
        }
    elif isinstance(model, SkewNormalModel):
        params = {"shape": list(model.shape)}
    else:
        params = {"marginals": [{"kind": m.kind, "params": list(m.params)} for m in model.marginals]}
    return {"kind": spec.kind.value, "params": params, "n": spec.n, "seed": spec.seed}
