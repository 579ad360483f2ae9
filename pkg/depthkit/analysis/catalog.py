"""The packaged experiment kinds: rank correlation, region overlap and boundary skewness."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
import pandas as pd

from depthkit.analysis.experiment import (
    BandVerdict,
    BaseExperiment,
    ExperimentOutcome,
    load_experiment_config,
)
from depthkit.analysis.experiments import run_boundary_experiment, run_correlation_experiment, run_overlap_experiment
from depthkit.analysis.matrix import MethodMatrix
from depthkit.analysis.overlap import OverlapMatrix
from depthkit.analysis.rank import CorrelationMatrix
from depthkit.analysis.registry import ExperimentRegistry
from depthkit.boundary import DEFAULT_MIN_MEMBERS, DEFAULT_SHELL_FRACTION, ShellPolicy
from depthkit.errors import InputError


def matrix_frame(matrix: MethodMatrix) -> pd.DataFrame:
    """Matrix as a frame with the method names as header row and first column."""
    frame = pd.DataFrame(matrix.values, index=list(matrix.methods), columns=list(matrix.methods))
    frame.index.name = "method"
    return frame


def _pair_rows(seeds: Sequence[int], matrices: Sequence[MethodMatrix]) -> pd.DataFrame:
    rows: list[dict[str, object]] = []
    for seed, mat in zip(seeds, matrices, strict=True):
        for i, a in enumerate(mat.methods):
            rows.extend(
                {"seed": seed, "method_a": a, "method_b": b, "value": float(mat.values[i, j])}
                for j, b in enumerate(mat.methods)
                if j > i
            )
    return pd.DataFrame(rows, columns=["seed", "method_a", "method_b", "value"])


def _at_least(check: str, observed: float, low: float) -> BandVerdict:
    return BandVerdict(check, observed, f">= {low}", observed >= low)


class CorrelationExperiment(BaseExperiment):
    """Spearman agreement of the depth rankings, averaged over replicates.

    Acceptance keys: ``reference`` with ``min``/``max`` bands on the mean
    matrix, and an optional ``ordering`` block (``preferred``, ``over``,
    ``min_fraction``) counted per replicate.
    """

    kind = "correlation"

    def run(self) -> ExperimentOutcome:
        """Run all replicates and check the bands."""
        model, settings = self.model(), self.depth_settings()
        matrices = self.run_replicates(
            lambda seed: run_correlation_experiment(model, self.n, seed, settings, self.metric, self.methods),
        )
        mean = CorrelationMatrix.average(matrices)
        return self.outcome(
            {"mean": mean.to_dict(), "replicates": len(matrices), "seeds": list(self.seeds)},
            {"correlation": matrix_frame(mean), "replicates": _pair_rows(self.seeds, matrices)},
            self._verdicts(mean, matrices),
        )

    def _verdicts(self, mean: CorrelationMatrix, matrices: Sequence[CorrelationMatrix]) -> list[BandVerdict]:
        acc = self.acceptance()
        reference = str(acc.get("reference", "3mad"))
        verdicts: list[BandVerdict] = []
        if "min" in acc or "max" in acc:
            low = float(acc.get("min", -1.0))
            high = float(acc.get("max", 1.0))
            for other in mean.methods:
                if other == reference:
                    continue
                observed = mean.entry(reference, other)
                verdicts.append(
                    BandVerdict(f"mean spearman {reference}~{other}", observed, f"[{low}, {high}]", low <= observed <= high),
                )
        ordering = acc.get("ordering")
        if ordering is not None:
            preferred = str(ordering.preferred)
            over = [str(o) for o in ordering.over]
            wins = sum(
                all(m.entry(reference, preferred) > m.entry(reference, o) for o in over) for m in matrices
            )
            verdicts.append(
                _at_least(
                    f"fraction of replicates with {reference}~{preferred} above {'/'.join(over)}",
                    wins / len(matrices),
                    float(ordering.get("min_fraction", 0.8)),
                ),
            )
        return verdicts


class OverlapExperiment(BaseExperiment):
    """Jaccard overlap of deepest-α regions, averaged over replicates.

    Acceptance key ``min`` bounds every off-diagonal entry of the mean matrix.
    """

    kind = "overlap"

    @property
    def alpha(self) -> float:
        """Region level."""
        return float(self.config.get("alpha", 0.5))

    def run(self) -> ExperimentOutcome:
        """Run all replicates and check the bands."""
        model, settings = self.model(), self.depth_settings()
        matrices = self.run_replicates(
            lambda seed: run_overlap_experiment(model, self.n, seed, self.alpha, settings, self.metric, self.methods),
        )
        mean = OverlapMatrix.average(matrices)
        verdicts: list[BandVerdict] = []
        acc = self.acceptance()
        if "min" in acc:
            low = float(acc.min)
            for i, a in enumerate(mean.methods):
                verdicts.extend(
                    _at_least(f"mean jaccard {a}~{b}", float(mean.values[i, j]), low)
                    for j, b in enumerate(mean.methods)
                    if j > i
                )
        return self.outcome(
            {"mean": mean.to_dict(), "replicates": len(matrices), "seeds": list(self.seeds)},
            {"overlap": matrix_frame(mean), "replicates": _pair_rows(self.seeds, matrices)},
            verdicts,
        )


class BoundaryExperiment(BaseExperiment):
    """Resultant length of μ_v for a symmetric and a skewed model over paired seeds.

    Acceptance keys: ``symmetric_max`` bounds the symmetric median and
    ``skewed_exceeds_symmetric`` requires the skewed median to be larger.
    """

    kind = "boundary"

    def shell_policy(self) -> ShellPolicy:
        """Shell policy from the ``shell`` block."""
        block = self.config.get("shell") or {}
        epsilon = block.get("epsilon")
        return ShellPolicy(
            min_members=int(block.get("min_members", DEFAULT_MIN_MEMBERS)),
            fraction=float(block.get("fraction", DEFAULT_SHELL_FRACTION)),
            epsilon=None if epsilon is None else float(epsilon),
        )

    def run(self) -> ExperimentOutcome:
        """Run all paired replicates and check the bands."""
        symmetric, skewed = self.model("symmetric"), self.model("skewed")
        center = str(self.config.get("center", "median"))
        policy = self.shell_policy()
        reports = self.run_replicates(
            lambda seed: run_boundary_experiment(symmetric, skewed, self.n, seed, self.metric, center, policy),
        )
        sym = np.array([r.symmetric.resultant_length for r in reports])
        skw = np.array([r.skewed.resultant_length for r in reports])
        sym_median, skw_median = float(np.median(sym)), float(np.median(skw))

        verdicts: list[BandVerdict] = []
        acc = self.acceptance()
        if "symmetric_max" in acc:
            high = float(acc.symmetric_max)
            verdicts.append(
                BandVerdict("median symmetric resultant length", sym_median, f"<= {high}", sym_median <= high),
            )
        if bool(acc.get("skewed_exceeds_symmetric", False)):
            gap = skw_median - sym_median
            verdicts.append(BandVerdict("median skewed minus symmetric resultant length", gap, "> 0", gap > 0.0))

        replicate_rows = pd.DataFrame(
            {
                "seed": list(self.seeds),
                "symmetric_resultant_length": sym,
                "skewed_resultant_length": skw,
                "symmetric_shell_size": [r.symmetric.shell_size for r in reports],
                "skewed_shell_size": [r.skewed.shell_size for r in reports],
            },
        )
        first = reports[0]
        tables = {
            "replicates": replicate_rows,
            "angles-symmetric": _angle_frame(first.symmetric.measure.angles, first.symmetric.measure.weights),
            "angles-skewed": _angle_frame(first.skewed.measure.angles, first.skewed.measure.weights),
        }
        summary: dict[str, object] = {
            "center": center,
            "median_resultant_length": {"symmetric": sym_median, "skewed": skw_median},
            "first_replicate": first.to_dict(),
            "seeds": list(self.seeds),
        }
        return self.outcome(summary, tables, verdicts)


def _angle_frame(angles: np.ndarray | None, weights: np.ndarray) -> pd.DataFrame:
    if angles is None:
        msg = "angle tables need 2-dimensional boundary measures"
        raise InputError(msg)
    return pd.DataFrame({"angle": angles, "weight": weights})


def default_registry() -> ExperimentRegistry:
    """Registry holding the three packaged experiment kinds."""
    return (
        ExperimentRegistry()
        .add_experiment(CorrelationExperiment)
        .add_experiment(OverlapExperiment)
        .add_experiment(BoundaryExperiment)
    )


def build_experiment(
    name: str,
    overrides: Sequence[str] = (),
    threads: int = 1,
    registry: ExperimentRegistry | None = None,
    logger: logging.Logger | None = None,
) -> BaseExperiment:
    """Load ``configs/<name>.yaml`` with overrides and instantiate its experiment class.

    Raises:
        InputError: Unknown experiment name or kind.

    """
    config = load_experiment_config(name, overrides)
    registry = registry or default_registry()
    kind = str(config.get("kind", ""))
    if not registry.has_experiment(kind):
        msg = f"experiment {name} has unknown kind {kind!r}"
        raise InputError(msg)
    return registry.get_experiment(kind)(name, config, threads, logger)
