"""Tests for depthkit.geometry.order_stats."""

import numpy as np
import pytest

from depthkit.errors import InputError
from depthkit.geometry import (
    coordinatewise_median,
    exceedance_fraction,
    lower_median,
    lower_order_statistic,
    lower_quantile,
    order_index,
    validate_level,
)


def test_order_index_rounds_products_that_are_integral_in_decimal() -> None:
    assert order_index(0.05, 500) == 25, "0.05 * 500 must select the 25th, not the 26th"
    assert order_index(0.1, 30) == 3


def test_order_index_clamps_to_valid_range() -> None:
    assert order_index(1e-9, 10) == 1
    assert order_index(0.999999, 10) == 10


def test_lower_median_takes_lower_middle_for_even_samples() -> None:
    assert float(lower_median([4.0, 1.0, 3.0, 2.0])) == 2.0


def test_lower_median_along_axis_returns_per_row_values() -> None:
    np.testing.assert_array_equal(lower_median([[3, 1, 2], [9, 7, 8]], axis=1), [2, 8])


def test_lower_quantile_matches_ceil_alpha_n_order_statistic() -> None:
    values = np.arange(1.0, 11.0)
    assert lower_quantile(values, 0.25) == 3.0
    assert lower_quantile(values, 0.5) == 5.0


def test_lower_order_statistic_rejects_out_of_range_rank() -> None:
    with pytest.raises(InputError, match="out of range"):
        lower_order_statistic([1.0, 2.0], 3)


def test_coordinatewise_median_is_lower_median_per_column() -> None:
    np.testing.assert_array_equal(coordinatewise_median([[0, 10], [1, 11], [2, 12], [3, 13]]), [1, 11])


def test_exceedance_fraction_counts_strictly_greater_values() -> None:
    reference = [0.5, 0.7, 0.7, 1.2]
    np.testing.assert_allclose(exceedance_fraction(reference, [0.5, 0.7, 1.2]), [0.75, 0.25, 0.0])


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1, float("nan")])
def test_validate_level_rejects_values_outside_open_unit_interval(alpha: float) -> None:
    with pytest.raises(InputError, match="strictly between 0 and 1"):
        validate_level(alpha)
