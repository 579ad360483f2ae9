"""Analytic reference densities backed by ``scipy.stats`` frozen distributions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy import stats

from depthkit.errors import InputError
from depthkit.geometry import FloatArray


class DensityKind(StrEnum):
    """Supported reference families."""

    NORMAL = "normal"
    EXPONENTIAL = "exponential"
    UNIFORM = "uniform"


_ARITY = {DensityKind.NORMAL: 2, DensityKind.EXPONENTIAL: 1, DensityKind.UNIFORM: 2}


@dataclass(frozen=True)
class DensityModel:
    """Normal(μ, σ), Exponential(rate) or Uniform(a, b).

    Attributes:
        kind: Family.
        params: ``(mu, sigma)``, ``(rate,)`` or ``(a, b)``.

    """

    kind: DensityKind
    params: tuple[float, ...]

    def __post_init__(self) -> None:
        """Check parameter count and ranges."""
        kind = DensityKind(self.kind)
        object.__setattr__(self, "kind", kind)
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != _ARITY[kind]:
            msg = f"{kind.value} takes {_ARITY[kind]} parameter(s), got {len(params)}"
            raise InputError(msg)
        if not all(np.isfinite(params)):
            msg = f"{kind.value} parameters must be finite, got {params}"
            raise InputError(msg)
        if kind is DensityKind.NORMAL and params[1] <= 0:
            msg = f"normal sigma must be positive, got {params[1]}"
            raise InputError(msg)
        if kind is DensityKind.EXPONENTIAL and params[0] <= 0:
            msg = f"exponential rate must be positive, got {params[0]}"
            raise InputError(msg)
        if kind is DensityKind.UNIFORM and params[0] >= params[1]:
            msg = f"uniform needs a < b, got a={params[0]}, b={params[1]}"
            raise InputError(msg)

    @classmethod
    def normal(cls, mu: float = 0.0, sigma: float = 1.0) -> DensityModel:
        """Normal(μ, σ)."""
        return cls(DensityKind.NORMAL, (mu, sigma))

    @classmethod
    def exponential(cls, rate: float = 1.0) -> DensityModel:
        """Exponential with the given rate (mean 1/rate)."""
        return cls(DensityKind.EXPONENTIAL, (rate,))

    @classmethod
    def uniform(cls, a: float = 0.0, b: float = 1.0) -> DensityModel:
        """Uniform on [a, b]."""
        return cls(DensityKind.UNIFORM, (a, b))

    @classmethod
    def parse(cls, text: str) -> DensityModel:
        """Parse ``kind:p1,p2`` (e.g. ``normal:0,1``, ``exponential:1``).

        A bare kind uses the standard parameters.
        """
        name, _, raw = text.strip().partition(":")
        try:
            kind = DensityKind(name.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in DensityKind)
            msg = f"unknown density model {name!r}; choose one of {choices}"
            raise InputError(msg) from None
        if not raw.strip():
            defaults = {
                DensityKind.NORMAL: (0.0, 1.0),
                DensityKind.EXPONENTIAL: (1.0,),
                DensityKind.UNIFORM: (0.0, 1.0),
            }
            return cls(kind, defaults[kind])
        try:
            params = tuple(float(p) for p in raw.split(","))
        except ValueError:
            msg = f"density parameters must be numbers, got {raw!r}"
            raise InputError(msg) from None
        return cls(kind, params)

    @cached_property
    def _dist(self) -> Any:  # noqa: ANN401
        if self.kind is DensityKind.NORMAL:
            return stats.norm(loc=self.params[0], scale=self.params[1])
        if self.kind is DensityKind.EXPONENTIAL:
            return stats.expon(scale=1.0 / self.params[0])
        a, b = self.params
        return stats.uniform(loc=a, scale=b - a)

    def pdf(self, x: npt.ArrayLike) -> FloatArray:
        """Density f_X."""
        return np.asarray(self._dist.pdf(x), dtype=np.float64)

    def cdf(self, x: npt.ArrayLike) -> FloatArray:
        """Distribution function F_X."""
        return np.asarray(self._dist.cdf(x), dtype=np.float64)

    def quantile(self, p: npt.ArrayLike) -> FloatArray:
        """Quantile function Q = F_X⁻¹."""
        return np.asarray(self._dist.ppf(p), dtype=np.float64)

    @property
    def median(self) -> float:
        """Population median M."""
        return float(self._dist.median())

    @property
    def spread(self) -> float:
        """A positive length scale, used to seed root brackets."""
        return float(self._dist.std())

    def sample(self, n: int, rng: np.random.Generator) -> FloatArray:
        """Draw ``n`` values from the model with the given generator."""
        return np.asarray(self._dist.rvs(size=n, random_state=rng), dtype=np.float64)

    def describe(self) -> str:
        """``kind:p1,p2`` form, inverse of :meth:`parse`."""
        return f"{self.kind.value}:" + ",".join(repr(p) for p in self.params)
