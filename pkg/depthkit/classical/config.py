"""Settings shared by the four classical depth functions."""

from dataclasses import dataclass
from enum import StrEnum

from depthkit.errors import InputError


class ClassicalMethod(StrEnum):
    """Comparison depths."""

    TUKEY = "tukey"
    SIMPLICIAL = "simplicial"
    SPATIAL = "spatial"
    PROJECTION = "projection"


@dataclass(frozen=True)
class DepthMethodConfig:
    """How a classical depth is evaluated.

    Attributes:
        method: Which depth.
        n_directions: Sampled directions for projection depth and approximate
            Tukey depth; random simplices for approximate simplicial depth.
        seed: Seed for every random draw the method makes.
        exact_2d: Use the exact angular sweeps when d = 2 (ignored otherwise
            for Tukey; simplicial rejects it for d > 2).

    """

    method: ClassicalMethod
    n_directions: int = 1000
    seed: int = 0
    exact_2d: bool = True

    def __post_init__(self) -> None:
        """Normalize the method name and validate counts."""
        try:
            object.__setattr__(self, "method", ClassicalMethod(self.method))
        except ValueError:
            choices = ", ".join(m.value for m in ClassicalMethod)
            msg = f"unknown depth method {self.method!r}; choose one of {choices}"
            raise InputError(msg) from None
        if self.n_directions < 1:
            msg = f"n_directions must be >= 1, got {self.n_directions}"
            raise InputError(msg)
        if self.seed < 0:
            msg = f"seed must be non-negative, got {self.seed}"
            raise InputError(msg)
