"""`BaseExperiment`: packaged experiment configs, seeded replicates and acceptance bands.

Each experiment is described by ``configs/<name>.yaml`` inside this package;
the ``kind`` key selects the experiment class that runs it.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from importlib import resources
from typing import ClassVar, TypeVar, cast

import pandas as pd
from omegaconf import DictConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException

from depthkit.datagen import GeneratorSpec, parse_generator_spec, preset, replicate_seed
from depthkit.errors import AcceptanceError, InputError
from depthkit.mmad import DEPTH_METHODS, DepthSettings
from depthkit.utils import log_with_extra, ordered_map

_R = TypeVar("_R")

CONFIG_PACKAGE = "depthkit.analysis"
CONFIG_DIR = "configs"


def available_experiments() -> tuple[str, ...]:
    """Names of the packaged experiment configs, sorted."""
    root = resources.files(CONFIG_PACKAGE).joinpath(CONFIG_DIR)
    return tuple(sorted(p.name.removesuffix(".yaml") for p in root.iterdir() if p.name.endswith(".yaml")))


def load_experiment_config(name: str, overrides: Sequence[str] = ()) -> DictConfig:
    """Load ``configs/<name>.yaml`` and apply ``key=value`` dot-list overrides.

    Raises:
        InputError: Unknown experiment, malformed override, or a config that is not a mapping.

    """
    if name not in available_experiments():
        msg = f"unknown experiment {name!r}; choose one of {', '.join(available_experiments())}"
        raise InputError(msg)
    ref = resources.files(CONFIG_PACKAGE).joinpath(CONFIG_DIR, f"{name}.yaml")
    loaded: object = OmegaConf.create(ref.read_text(encoding="utf-8"))
    if not isinstance(loaded, DictConfig):
        msg = f"experiment config must contain a dictionary, got {type(loaded).__name__}"
        raise InputError(msg)
    try:
        merged = OmegaConf.merge(loaded, OmegaConf.from_dotlist(list(overrides)))
    except OmegaConfBaseException as e:
        msg = f"invalid experiment override: {e}"
        raise InputError(msg) from None
    return cast("DictConfig", merged)


@dataclass(frozen=True)
class BandVerdict:
    """One acceptance check.

    Attributes:
        check: What was checked.
        observed: Observed statistic.
        bound: Human-readable band, e.g. ``>= 0.9``.
        passed: Whether ``observed`` lies in the band.

    """

    check: str
    observed: float
    bound: str
    passed: bool

    def to_dict(self) -> dict[str, object]:
        """JSON-ready form."""
        return {"check": self.check, "observed": self.observed, "bound": self.bound, "passed": self.passed}


@dataclass(frozen=True)
class ExperimentOutcome:
    """Everything an experiment produced.

    Attributes:
        name: Experiment name.
        kind: Experiment kind.
        config: Resolved config as plain containers.
        summary: JSON document describing the result.
        tables: CSV tables by file stem.
        verdicts: Acceptance checks.

    """

    name: str
    kind: str
    config: dict[str, object]
    summary: dict[str, object]
    tables: dict[str, pd.DataFrame] = field(default_factory=dict)
    verdicts: tuple[BandVerdict, ...] = ()

    @property
    def passed(self) -> bool:
        """True when every acceptance check passed."""
        return all(v.passed for v in self.verdicts)

    def report(self) -> dict[str, object]:
        """Summary plus verdicts, as written to ``summary.json``."""
        return {
            "experiment": self.name,
            "kind": self.kind,
            "passed": self.passed,
            "verdicts": [v.to_dict() for v in self.verdicts],
            **self.summary,
        }

    def raise_for_verdicts(self) -> None:
        """Raise AcceptanceError naming every failed check."""
        failed = [v for v in self.verdicts if not v.passed]
        if failed:
            detail = "; ".join(f"{v.check}={v.observed:.4g} (want {v.bound})" for v in failed)
            msg = f"experiment {self.name} missed its acceptance bands: {detail}"
            raise AcceptanceError(msg)


class BaseExperiment(ABC):
    """Abstract base class for packaged experiments.

    Subclasses set ``kind`` (matched against the config's ``kind`` key) and
    implement :meth:`run`. Common config keys read here: ``replicates``,
    ``seed``, ``n``, ``metric``, ``methods`` and the ``depth`` block.

    Example:
        class MyExperiment(BaseExperiment):
            kind = "mine"

            def run(self) -> ExperimentOutcome:
                values = self.run_replicates(lambda seed: seed * 2)
                return self.outcome({"values": values})

    """

    kind: ClassVar[str]

    def __init__(
        self,
        name: str,
        config: DictConfig,
        threads: int = 1,
        logger: logging.Logger | None = None,
    ) -> None:
        """Bind a resolved config.

        Args:
            name: Experiment name (config file stem).
            config: Resolved config.
            threads: Worker count for replicates.
            logger: Progress logger (default: this module's logger).

        Raises:
            InputError: If the config is for another kind or has invalid common keys.

        """
        self.name = name
        self.config = config
        self.threads = threads
        self.logger = logger or logging.getLogger(__name__)
        configured_kind = str(config.get("kind", ""))
        if configured_kind != self.kind:
            msg = f"experiment {name} is of kind {configured_kind!r}, not {self.kind!r}"
            raise InputError(msg)
        if self.replicates < 1:
            msg = f"replicates must be >= 1, got {self.replicates}"
            raise InputError(msg)
        if self.base_seed < 0:
            msg = f"seed must be non-negative, got {self.base_seed}"
            raise InputError(msg)

    @property
    def replicates(self) -> int:
        """Number of replicate seeds."""
        return int(self.config.get("replicates", 10))

    @property
    def base_seed(self) -> int:
        """Seed of replicate 0."""
        return int(self.config.get("seed", 0))

    @property
    def seeds(self) -> tuple[int, ...]:
        """Replicate seeds, base + r."""
        return tuple(replicate_seed(self.base_seed, r) for r in range(self.replicates))

    @property
    def n(self) -> int | None:
        """Sample size override, or None to use the model's own."""
        raw = self.config.get("n")
        return None if raw is None else int(raw)

    @property
    def metric(self) -> str:
        """3MAD geometry name."""
        return str(self.config.get("metric", "mahalanobis"))

    @property
    def methods(self) -> tuple[str, ...]:
        """Depth methods in output order."""
        raw = self.config.get("methods")
        return DEPTH_METHODS if raw is None else tuple(str(m) for m in raw)

    def depth_settings(self) -> DepthSettings:
        """Classical-method settings from the ``depth`` block (metric is set per sample)."""
        block = self.config.get("depth") or {}
        return DepthSettings(
            n_directions=int(block.get("n_directions", 1000)),
            seed=int(block.get("seed", 0)),
            exact_2d=bool(block.get("exact_2d", True)),
        )

    def model(self, key: str = "model") -> GeneratorSpec:
        """Generator for ``key``: a preset name or an inline generator document."""
        raw = self.config.get(key)
        if raw is None:
            msg = f"experiment {self.name} has no {key!r} entry"
            raise InputError(msg)
        if isinstance(raw, str):
            return preset(raw)
        container = OmegaConf.to_container(raw, resolve=True)
        if not isinstance(container, Mapping):
            msg = f"{key} must be a preset name or a generator mapping"
            raise InputError(msg)
        document = {"n": self.n or 1, **cast("Mapping[str, object]", container)}
        return parse_generator_spec(document)

    def acceptance(self) -> DictConfig:
        """The ``acceptance`` block, empty when absent."""
        block = self.config.get("acceptance")
        return block if isinstance(block, DictConfig) else OmegaConf.create({})

    def run_replicates(self, fn: Callable[[int], _R]) -> list[_R]:
        """Evaluate ``fn(seed)`` for every replicate seed, results in seed order."""

        def one(seed: int) -> _R:
            result = fn(seed)
            log_with_extra(self.logger, logging.INFO, "replicate finished", experiment=self.name, seed=seed)
            return result

        return ordered_map(one, self.seeds, self.threads)

    def outcome(
        self,
        summary: dict[str, object],
        tables: dict[str, pd.DataFrame] | None = None,
        verdicts: Sequence[BandVerdict] = (),
    ) -> ExperimentOutcome:
        """Package results, logging each verdict."""
        for v in verdicts:
            level = logging.INFO if v.passed else logging.WARNING
            log_with_extra(
                self.logger,
                level,
                "acceptance " + ("passed" if v.passed else "FAILED"),
                check=v.check,
                observed=round(v.observed, 6),
                bound=v.bound,
            )
        container = OmegaConf.to_container(self.config, resolve=True)
        return ExperimentOutcome(
            name=self.name,
            kind=self.kind,
            config=cast("dict[str, object]", container),
            summary=summary,
            tables=tables or {},
            verdicts=tuple(verdicts),
        )

    @abstractmethod
    def run(self) -> ExperimentOutcome:
        """Run every replicate and evaluate the acceptance bands."""
