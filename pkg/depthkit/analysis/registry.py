"""Mutable registry of `BaseExperiment` subclasses keyed by experiment kind."""

from __future__ import annotations

from depthkit.analysis.experiment import BaseExperiment


class ExperimentRegistry:
    """Builder for registering experiment classes.

    Example:
        registry = ExperimentRegistry()
        registry.add_experiment(CorrelationExperiment).add_experiment(OverlapExperiment)
        experiment_class = registry.get_experiment("correlation")

    """

    def __init__(self) -> None:
        """Initialize an empty registry."""
        self._experiments: dict[str, type[BaseExperiment]] = {}

    def add_experiment(self, experiment_class: type[BaseExperiment]) -> ExperimentRegistry:
        """Register a class under its ``kind``.

        Returns:
            Self for method chaining

        """
        self._experiments[experiment_class.kind] = experiment_class
        return self

    def get_experiment(self, kind: str) -> type[BaseExperiment]:
        """Experiment class for ``kind``.

        Raises:
            KeyError: If no class is registered for the kind.

        """
        return self._experiments[kind]

    def has_experiment(self, kind: str) -> bool:
        """Check if a kind is registered."""
        return kind in self._experiments

    def get_all_experiments(self) -> dict[str, type[BaseExperiment]]:
        """Copy of the kind → class mapping."""
        return self._experiments.copy()
