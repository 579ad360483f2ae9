"""Tests for depthkit.mmad.regions: central regions and quantile shells."""

import numpy as np
import pytest

from depthkit.datagen import generate, preset
from depthkit.errors import InputError
from depthkit.geometry import Metric
from depthkit.mmad import (
    DEFAULT_SHELL_LEVELS,
    DepthVector,
    central_region,
    central_region_from_scores,
    depth_3mad,
    shell_assign,
    validate_levels,
)


def _phi(values: list[float]) -> DepthVector:
    arr = np.asarray(values, dtype=np.float64)
    return DepthVector(arr, np.zeros_like(arr))


def test_central_region_uses_lower_quantile_threshold() -> None:
    region = central_region(_phi([1, 2, 3, 4]), 0.5)
    assert region.radius_threshold == 2.0
    assert region.member_indices.tolist() == [0, 1]
    assert region.size == 2


def test_central_region_near_one_keeps_everything() -> None:
    assert central_region(_phi([4, 3, 2, 1]), 0.99).size == 4


def test_central_region_keeps_ties_at_the_threshold() -> None:
    region = central_region(_phi([1, 2, 2, 5]), 0.5)
    assert region.member_indices.tolist() == [0, 1, 2]


@pytest.mark.parametrize("alpha", [0.0, 1.0, 1.5])
def test_central_region_rejects_levels_outside_unit_interval(alpha: float) -> None:
    with pytest.raises(InputError):
        central_region(_phi([1, 2]), alpha)


def test_central_region_from_scores_rejects_empty_scores() -> None:
    with pytest.raises(InputError, match="empty"):
        central_region_from_scores([], 0.5)


def test_deepest_half_of_correlated_gaussian_has_exactly_half_the_points() -> None:
    data = generate(preset("overlap-elliptical", seed=3))
    dv = depth_3mad(data, Metric.mahalanobis(np.cov(data.values, rowvar=False)))
    assert central_region(dv, 0.5).size == 500


def test_shell_assign_single_level_splits_at_quantile() -> None:
    shells = shell_assign(_phi(list(range(1, 11))), [0.5])
    assert shells.sizes() == [5, 5]
    assert shells.members(0).tolist() == [0, 1, 2, 3, 4]


def test_shell_assign_two_levels_on_eight_values() -> None:
    assert shell_assign(_phi(list(range(1, 9))), [0.25, 0.75]).sizes() == [2, 4, 2]


def test_shell_assign_puts_values_on_a_threshold_in_the_inner_shell() -> None:
    shells = shell_assign(_phi([1, 2, 2, 3]), [0.5])
    assert shells.shell_index.tolist() == [0, 0, 0, 1]


def test_shell_assign_reproduces_nested_mixture_shell_sizes() -> None:
    data = generate(preset("shells-mixture", seed=0))
    shells = shell_assign(depth_3mad(data, Metric.l2()), DEFAULT_SHELL_LEVELS)
    assert shells.sizes() == [25, 25, 75, 125, 125, 75, 25, 25]
    assert sum(shells.sizes()) == data.n, "shells must partition the sample"


@pytest.mark.parametrize(
    ("levels", "match"),
    [
        ([], "at least one"),
        ([0.5, 0.25], "strictly increasing"),
        ([0.25, 0.25], "strictly increasing"),
        ([0.0, 0.5], "strictly between"),
    ],
)
def test_validate_levels_rejects_bad_level_lists(levels: list[float], match: str) -> None:
    with pytest.raises(InputError, match=match):
        validate_levels(levels)
