"""Rank-correlation, region-overlap, boundary and timing experiments on generated data."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass, replace

import numpy as np

from depthkit.analysis.overlap import OverlapMatrix, overlap_matrix
from depthkit.analysis.rank import CorrelationMatrix, spearman_matrix
from depthkit.boundary import (
    AngularMeasure,
    CenterRule,
    ShellPolicy,
    angular_measure,
    extract_boundary_shell,
    gradient,
    locate_center,
)
from depthkit.datagen import GeneratorSpec, generate
from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric, metric_from_name
from depthkit.mmad import (
    DEPTH_METHODS,
    MMAD_METHOD,
    CentralRegion,
    DepthSettings,
    central_region_from_scores,
    check_method,
    depth_3mad,
    evaluate_depth,
)

logger = logging.getLogger(__name__)

DEFAULT_EXPERIMENT_METRIC = "mahalanobis"


def _sample(model: GeneratorSpec, n: int | None, seed: int) -> Dataset:
    spec = model if n is None else model.with_n(n)
    return generate(spec, seed)


def _settings_for(data: Dataset, settings: DepthSettings | None, metric: str) -> DepthSettings:
    base = settings or DepthSettings()
    return replace(base, metric=metric_from_name(metric, data))


def _methods(methods: Sequence[str]) -> tuple[str, ...]:
    names = tuple(check_method(m) for m in methods)
    if not names:
        msg = "at least one depth method is required"
        raise InputError(msg)
    return names


def run_correlation_experiment(
    model: GeneratorSpec,
    n: int | None,
    seed: int,
    settings: DepthSettings | None = None,
    metric: str = DEFAULT_EXPERIMENT_METRIC,
    methods: Sequence[str] = DEPTH_METHODS,
) -> CorrelationMatrix:
    """Spearman matrix of depth rankings of one generated sample.

    Every method scores the sample points themselves; 3MAD uses ``metric``
    (Mahalanobis with the sample covariance by default).

    Args:
        model: Generator for the sample.
        n: Sample size, or None for ``model.n``.
        seed: Generator seed.
        settings: Direction counts, exactness and threads for the classical methods.
        metric: 3MAD geometry name.
        methods: Methods to compare, in output order.

    """
    data = _sample(model, n, seed)
    cfg = _settings_for(data, settings, metric)
    depths = {name: evaluate_depth(name, data, cfg) for name in _methods(methods)}
    return spearman_matrix(depths)


def central_regions(
    data: Dataset,
    alpha: float,
    settings: DepthSettings,
    methods: Sequence[str] = DEPTH_METHODS,
) -> dict[str, CentralRegion]:
    """Deepest-α region of ``data`` under each method.

    3MAD regions are cut on Φ; the others on −depth.
    """
    regions: dict[str, CentralRegion] = {}
    for name in _methods(methods):
        if name == MMAD_METHOD:
            scores = depth_3mad(data, settings.metric, threads=settings.threads).phi
        else:
            scores = -evaluate_depth(name, data, settings)
        regions[name] = central_region_from_scores(scores, alpha)
    return regions


def run_overlap_experiment(
    model: GeneratorSpec,
    n: int | None,
    seed: int,
    alpha: float = 0.5,
    settings: DepthSettings | None = None,
    metric: str = DEFAULT_EXPERIMENT_METRIC,
    methods: Sequence[str] = DEPTH_METHODS,
) -> OverlapMatrix:
    """Pairwise Jaccard overlap of deepest-α regions on one generated sample."""
    data = _sample(model, n, seed)
    cfg = _settings_for(data, settings, metric)
    return overlap_matrix(central_regions(data, alpha, cfg, methods))


@dataclass(frozen=True)
class BoundarySide:
    """Boundary geometry of one dataset at its chosen center.

    Attributes:
        center: The point v.
        phi: Φ(v).
        half_width: Shell half-width ε.
        shell_size: Number of shell members.
        gradient: Mean outward unit direction.
        measure: The empirical μ_v.

    """

    center: FloatArray
    phi: float
    half_width: float
    shell_size: int
    gradient: FloatArray
    measure: AngularMeasure

    @property
    def resultant_length(self) -> float:
        """Length of the resultant of μ_v."""
        return self.measure.resultant_length

    def to_dict(self) -> dict[str, object]:
        """JSON-ready summary (without the per-member directions)."""
        return {
            "center": self.center.tolist(),
            "phi": self.phi,
            "half_width": self.half_width,
            "shell_size": self.shell_size,
            "gradient": self.gradient.tolist(),
            "resultant_length": self.resultant_length,
        }


@dataclass(frozen=True)
class BoundaryReport:
    """Symmetric and skewed boundary diagnostics from one paired seed."""

    seed: int
    symmetric: BoundarySide
    skewed: BoundarySide

    def to_dict(self) -> dict[str, object]:
        """JSON-ready summary."""
        return {"seed": self.seed, "symmetric": self.symmetric.to_dict(), "skewed": self.skewed.to_dict()}


def boundary_side(
    data: Dataset,
    m: Metric,
    center: CenterRule | str = CenterRule.MEDIAN,
    policy: ShellPolicy | None = None,
    threads: int = 1,
) -> BoundarySide:
    """Shell, gradient and μ_v of ``data`` at the center chosen by ``center``."""
    if data.d != 2:  # noqa: PLR2004
        msg = f"boundary diagnostics need 2-dimensional data, got d={data.d}"
        raise InputError(msg)
    v = locate_center(center, data, m, threads)
    shell = extract_boundary_shell(v, data, m, policy)
    return BoundarySide(
        center=v,
        phi=shell.radius,
        half_width=shell.half_width,
        shell_size=shell.size,
        gradient=gradient(v, shell),
        measure=angular_measure(shell),
    )


def run_boundary_experiment(
    symmetric: GeneratorSpec,
    skewed: GeneratorSpec,
    n: int | None,
    seed: int,
    metric: str = "l2",
    center: CenterRule | str = CenterRule.MEDIAN,
    policy: ShellPolicy | None = None,
) -> BoundaryReport:
    """Boundary diagnostics of a symmetric and a skewed sample drawn with the same seed."""
    sides: list[BoundarySide] = []
    for spec in (symmetric, skewed):
        data = _sample(spec, n, seed)
        sides.append(boundary_side(data, metric_from_name(metric, data), center, policy))
    return BoundaryReport(seed, sides[0], sides[1])


@dataclass(frozen=True)
class ScalingReport:
    """Wall-clock time of 3MAD depth for all n points.

    Attributes:
        d: Dimension used for the n sweep.
        n: Sample size used for the d sweep.
        n_timings: ``(n, seconds)`` per sample size.
        d_timings: ``(d, seconds)`` per dimension.

    """

    d: int
    n: int
    n_timings: tuple[tuple[int, float], ...]
    d_timings: tuple[tuple[int, float], ...]

    @staticmethod
    def _ratios(timings: tuple[tuple[int, float], ...]) -> tuple[float, ...]:
        return tuple(later / earlier for (_, earlier), (_, later) in zip(timings, timings[1:], strict=False))

    @property
    def n_ratios(self) -> tuple[float, ...]:
        """Time ratio between consecutive sample sizes."""
        return self._ratios(self.n_timings)

    @property
    def d_ratios(self) -> tuple[float, ...]:
        """Time ratio between consecutive dimensions."""
        return self._ratios(self.d_timings)


def _time_depth(n: int, d: int, seed: int, threads: int) -> float:
    data = Dataset.from_array(np.random.default_rng(seed).standard_normal((n, d)))
    start = time.perf_counter()
    depth_3mad(data, Metric.l2(), threads=threads)
    return time.perf_counter() - start


def time_depth_scaling(
    ns: Sequence[int] = (2000, 4000, 8000),
    ds: Sequence[int] = (5, 10, 20),
    d: int = 5,
    n: int = 2000,
    seed: int = 0,
    threads: int = 1,
) -> ScalingReport:
    """Time all-point 3MAD depth over a sweep of n (at fixed d) and of d (at fixed n).

    Expected growth is quadratic in n and linear in d.
    """
    n_timings = tuple((k, _time_depth(k, d, seed, threads)) for k in ns)
    d_timings = tuple((k, _time_depth(n, k, seed, threads)) for k in ds)
    report = ScalingReport(d, n, n_timings, d_timings)
    logger.info("3MAD timing ratios: n-doubling %s, d-doubling %s", report.n_ratios, report.d_ratios)
    return report
