"""Tests for depthkit.analysis.experiments: single-replicate experiment runs."""

import numpy as np
import pytest

from depthkit.analysis import (
    ScalingReport,
    boundary_side,
    central_regions,
    run_boundary_experiment,
    run_correlation_experiment,
    run_overlap_experiment,
    time_depth_scaling,
)
from depthkit.boundary import ShellPolicy
from depthkit.datagen import generate, preset
from depthkit.errors import InputError
from depthkit.geometry import Dataset, Metric
from depthkit.mmad import DepthSettings

FAST = DepthSettings(n_directions=200)
QUICK_METHODS = ("3mad", "spatial", "projection")


def test_correlation_experiment_returns_matrix_over_requested_methods() -> None:
    mat = run_correlation_experiment(preset("table1-elliptical"), 120, 1, FAST, methods=QUICK_METHODS)
    assert mat.methods == QUICK_METHODS
    assert mat.values.shape == (3, 3)
    assert np.all(np.abs(mat.off_diagonal()) <= 1.0)
    assert mat.entry("3mad", "spatial") > 0.8, "elliptical rankings should agree closely"  # noqa: PLR2004


def test_correlation_experiment_is_deterministic_for_a_seed() -> None:
    model = preset("table1-mixture")
    a = run_correlation_experiment(model, 80, 4, FAST, methods=QUICK_METHODS)
    b = run_correlation_experiment(model, 80, 4, FAST, methods=QUICK_METHODS)
    np.testing.assert_array_equal(a.values, b.values)


def test_correlation_experiment_rejects_unknown_or_missing_methods() -> None:
    model = preset("table1-elliptical")
    with pytest.raises(InputError, match="unknown depth method"):
        run_correlation_experiment(model, 50, 0, FAST, methods=("3mad", "halfspace"))
    with pytest.raises(InputError, match="at least one depth method"):
        run_correlation_experiment(model, 50, 0, FAST, methods=())


def test_central_regions_hold_the_requested_fraction_of_points(gaussian_2d: Dataset) -> None:
    settings = DepthSettings(metric=Metric.l2(), n_directions=200)
    regions = central_regions(gaussian_2d, 0.25, settings, QUICK_METHODS)
    assert tuple(regions) == QUICK_METHODS
    for name, region in regions.items():
        assert region.n == gaussian_2d.n
        assert region.size >= 100, f"{name} region should hold at least ceil(0.25 * 400) points"  # noqa: PLR2004


def test_overlap_experiment_regions_largely_agree_on_elliptical_data() -> None:
    mat = run_overlap_experiment(preset("overlap-elliptical"), 300, 2, 0.5, FAST, methods=QUICK_METHODS)
    assert mat.alpha == 0.5  # noqa: PLR2004
    assert mat.off_diagonal().min() > 0.6, f"overlaps too small: {mat.off_diagonal()}"  # noqa: PLR2004


def test_boundary_side_reports_shell_geometry(gaussian_2d: Dataset) -> None:
    side = boundary_side(gaussian_2d, Metric.l2(), "mean", ShellPolicy(fraction=0.2))
    np.testing.assert_allclose(side.center, gaussian_2d.values.mean(axis=0))
    assert side.shell_size >= 80  # noqa: PLR2004
    assert side.phi > 0.0
    assert side.gradient.shape == (2,)
    assert 0.0 <= side.resultant_length <= 1.0
    assert set(side.to_dict()) == {"center", "phi", "half_width", "shell_size", "gradient", "resultant_length"}


def test_boundary_side_requires_planar_data(rng: np.random.Generator) -> None:
    data = Dataset.from_array(rng.standard_normal((50, 3)))
    with pytest.raises(InputError, match="2-dimensional"):
        boundary_side(data, Metric.l2())


def test_boundary_experiment_draws_both_samples_from_the_same_seed() -> None:
    sym, skw = preset("boundary-symmetric"), preset("boundary-skewed")
    report = run_boundary_experiment(sym, skw, 300, 5, center="mean", policy=ShellPolicy(fraction=0.4))
    assert report.seed == 5  # noqa: PLR2004
    np.testing.assert_allclose(report.symmetric.center, generate(sym.with_n(300), 5).values.mean(axis=0))
    assert report.to_dict()["seed"] == 5  # noqa: PLR2004


@pytest.mark.slow
def test_skewed_boundary_measure_is_more_concentrated_than_symmetric() -> None:
    sym, skw = preset("boundary-symmetric"), preset("boundary-skewed")
    reports = [run_boundary_experiment(sym, skw, 1000, seed) for seed in range(20)]
    sym_len = np.median([r.symmetric.resultant_length for r in reports])
    skw_len = np.median([r.skewed.resultant_length for r in reports])
    assert sym_len <= 0.1, f"symmetric resultant length {sym_len}"  # noqa: PLR2004
    assert skw_len > sym_len


def test_scaling_report_ratios_compare_consecutive_timings() -> None:
    report = ScalingReport(5, 2000, ((100, 1.0), (200, 4.0), (400, 15.0)), ((5, 2.0), (10, 4.2)))
    assert report.n_ratios == pytest.approx((4.0, 3.75))
    assert report.d_ratios == pytest.approx((2.1,))


def test_time_depth_scaling_times_every_size() -> None:
    report = time_depth_scaling(ns=(20, 40), ds=(2, 3), d=2, n=20)
    assert [k for k, _ in report.n_timings] == [20, 40]
    assert [k for k, _ in report.d_timings] == [2, 3]
    assert all(t >= 0.0 for _, t in report.n_timings + report.d_timings)
    assert len(report.n_ratios) == 1
