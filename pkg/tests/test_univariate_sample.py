"""Tests for depthkit.univariate.sample: empirical G, depth and slopes."""

import numpy as np
import pytest
from scipy import stats

from depthkit.errors import InputError
from depthkit.geometry import lower_median
from depthkit.univariate import (
    DensityModel,
    UnivariateSample,
    depth_univariate,
    g_scale,
    g_scale_many,
    g_subdifferential,
    g_subdifferential_population,
)

ONE_TO_FIVE = UnivariateSample.from_values([1, 2, 3, 4, 5])


def _normal_quantile_sample(n: int = 201) -> UnivariateSample:
    return UnivariateSample.from_values(stats.norm.ppf((np.arange(1, n + 1) - 0.5) / n))


@pytest.mark.parametrize(
    ("values", "v", "expected"),
    [
        ([1, 2, 3, 4, 5], 3.0, 1.0),
        ([1, 2, 3, 4, 5], 0.0, 3.0),
        ([1, 2, 3, 4], 0.0, 2.0),
    ],
)
def test_g_scale_is_lower_median_of_absolute_deviations(
    values: list[float],
    v: float,
    expected: float,
) -> None:
    assert g_scale(v, UnivariateSample.from_values(values)) == expected


def test_univariate_sample_is_sorted_and_rejects_empty_input() -> None:
    assert UnivariateSample.from_values([3, 1, 2]).values.tolist() == [1.0, 2.0, 3.0]
    with pytest.raises(InputError, match="empty"):
        UnivariateSample.from_values([])


def test_g_scale_is_affine_equivariant(rng: np.random.Generator) -> None:
    x = rng.normal(size=41)
    for _ in range(20):
        a, c, v = rng.normal(), rng.normal(), rng.normal()
        moved = UnivariateSample.from_values(a * x + c)
        assert g_scale(a * v + c, moved) == pytest.approx(abs(a) * g_scale(v, UnivariateSample.from_values(x)))


def test_g_scale_is_one_lipschitz(rng: np.random.Generator) -> None:
    s = UnivariateSample.from_values(rng.exponential(size=60))
    for v1, v2 in rng.normal(scale=3.0, size=(100, 2)):
        assert abs(g_scale(v1, s) - g_scale(v2, s)) <= abs(v1 - v2) + 1e-12


def test_g_scale_sublevel_sets_are_intervals_for_unimodal_sample() -> None:
    s = _normal_quantile_sample()
    grid = np.linspace(-6.0, 6.0, 2001)
    values = g_scale_many(grid, s)
    for c in np.quantile(values, [0.3, 0.5, 0.7, 0.9]):
        inside = np.flatnonzero(values <= c)
        assert np.all(np.diff(inside) == 1), f"sublevel set at c={c} has a gap"


def test_g_scale_is_minimal_at_median_of_symmetric_sample() -> None:
    s = _normal_quantile_sample()
    grid = np.linspace(-3.0, 3.0, 6001)
    assert g_scale(0.0, s) <= g_scale_many(grid, s).min() + 1e-12
    assert g_scale(0.0, s) == pytest.approx(float(lower_median(np.abs(s.values))))


def test_depth_univariate_is_maximal_at_median_of_symmetric_sample() -> None:
    s = _normal_quantile_sample()
    assert depth_univariate([0.0], s)[0] == depth_univariate(s.values, s).max()


def test_depth_univariate_uses_strict_exceedance_on_g_values(rng: np.random.Generator) -> None:
    s = UnivariateSample.from_values(rng.exponential(size=25))
    g = g_scale_many(s.values, s)
    depth = depth_univariate(s.values, s)
    for gi, di in zip(g, depth, strict=True):
        assert di == pytest.approx(np.mean(g > gi))


def test_depth_univariate_gives_tied_g_values_equal_depth() -> None:
    # G at the points is 2, 1, 1, 2, 5.
    s = UnivariateSample.from_values([0.0, 1.0, 2.0, 3.0, 7.0])
    g = g_scale_many(s.values, s)
    depth = depth_univariate(s.values, s)
    for gi, di in zip(g, depth, strict=True):
        assert di == pytest.approx(np.mean(g > gi))
    np.testing.assert_allclose(depth, [0.2, 0.6, 0.6, 0.2, 0.0])


def test_depth_univariate_vanishes_far_from_the_sample(rng: np.random.Generator) -> None:
    x = rng.normal(size=50)
    s = UnivariateSample.from_values(x)
    far = x.max() + 10.0 * (x.max() - x.min())
    assert depth_univariate([far, -far], s).tolist() == [0.0, 0.0]


def test_depth_univariate_queries_do_not_change_sample_depths(rng: np.random.Generator) -> None:
    s = UnivariateSample.from_values(rng.normal(size=30))
    alone = depth_univariate(s.values, s)
    mixed = depth_univariate(np.concatenate([s.values, [100.0, -50.0]]), s)
    np.testing.assert_array_equal(mixed[:30], alone)


def test_g_subdifferential_counts_weak_tail_fractions() -> None:
    sub = g_subdifferential(0.0, ONE_TO_FIVE)
    assert sub.lower == pytest.approx(0.6)
    assert sub.upper == pytest.approx(0.4), "atoms on the boundary make upper < lower"


def test_g_subdifferential_is_antisymmetric_for_symmetric_sample() -> None:
    sub = g_subdifferential(0.0, UnivariateSample.from_values([-2, -1, 0, 1, 2]))
    assert sub.lower == pytest.approx(-sub.upper)
    assert sub.lower <= sub.upper


@pytest.mark.slow
def test_g_subdifferential_approaches_population_tail_fractions() -> None:
    rng = np.random.default_rng(7)
    s = UnivariateSample.from_values(rng.standard_normal(10_000))
    target = g_subdifferential_population(1.0, DensityModel.normal())
    sub = g_subdifferential(1.0, s)
    assert abs(sub.lower - target.lower) <= 0.05
    assert abs(sub.upper - target.upper) <= 0.05
