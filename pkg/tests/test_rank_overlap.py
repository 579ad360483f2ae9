"""Tests for depthkit.analysis rank correlation, region overlap and method matrices."""

import numpy as np
import pytest
from scipy import stats

from depthkit.analysis import (
    CorrelationMatrix,
    MethodMatrix,
    OverlapMatrix,
    jaccard_overlap,
    overlap_matrix,
    spearman,
    spearman_matrix,
)
from depthkit.errors import InputError
from depthkit.mmad import CentralRegion, central_region_from_scores


def test_spearman_of_one_swap_is_one_half() -> None:
    assert spearman([1, 2, 3], [1, 3, 2]) == pytest.approx(0.5)


def test_spearman_is_one_for_monotone_transform(rng: np.random.Generator) -> None:
    x = rng.normal(size=50)
    assert spearman(x, np.exp(x)) == pytest.approx(1.0)
    assert spearman(x, -(x**3)) == pytest.approx(-1.0)


def test_spearman_uses_average_ranks_for_ties(rng: np.random.Generator) -> None:
    x = rng.integers(0, 5, size=40).astype(float)
    y = x + rng.normal(size=40)
    expected = stats.spearmanr(x, y).statistic
    assert spearman(x, y) == pytest.approx(float(expected), abs=1e-12)


@pytest.mark.parametrize(
    ("a", "b", "match"),
    [
        ([1.0], [2.0], "at least 2"),
        ([1.0, 2.0], [1.0, 2.0, 3.0], "equal lengths"),
        ([1.0, 1.0, 1.0], [1.0, 2.0, 3.0], "constant"),
    ],
    ids=["too-short", "length-mismatch", "constant"],
)
def test_spearman_rejects_degenerate_input(a: list[float], b: list[float], match: str) -> None:
    with pytest.raises(InputError, match=match):
        spearman(a, b)


def test_spearman_matrix_is_symmetric_with_unit_diagonal_in_mapping_order() -> None:
    mat = spearman_matrix({"b": [1, 2, 3, 4], "a": [1, 3, 2, 4], "c": [4, 3, 2, 1]})
    assert mat.methods == ("b", "a", "c")
    np.testing.assert_array_equal(np.diag(mat.values), [1.0, 1.0, 1.0])
    np.testing.assert_array_equal(mat.values, mat.values.T)
    assert mat.entry("b", "c") == pytest.approx(-1.0)
    assert mat.entry("a", "b") == pytest.approx(0.8)


def test_method_matrix_rejects_bad_shapes_and_values() -> None:
    with pytest.raises(InputError, match="2x2"):
        MethodMatrix(("a", "b"), np.eye(3))
    with pytest.raises(InputError, match="symmetric"):
        MethodMatrix(("a", "b"), np.array([[1.0, 0.2], [0.3, 1.0]]))
    with pytest.raises(InputError, match="unit diagonal"):
        MethodMatrix(("a", "b"), np.array([[1.0, 0.2], [0.2, 0.9]]))


def test_method_matrix_entry_rejects_unknown_method() -> None:
    mat = MethodMatrix(("a", "b"), np.eye(2))
    with pytest.raises(InputError, match="not in"):
        mat.entry("a", "z")


def test_method_matrix_values_are_read_only() -> None:
    mat = MethodMatrix(("a", "b"), np.eye(2))
    with pytest.raises(ValueError, match="read-only"):
        mat.values[0, 1] = 0.5


def test_off_diagonal_lists_upper_triangle_row_by_row() -> None:
    values = np.array([[1.0, 0.1, 0.2], [0.1, 1.0, 0.3], [0.2, 0.3, 1.0]])
    assert MethodMatrix(("a", "b", "c"), values).off_diagonal().tolist() == [0.1, 0.2, 0.3]


def test_correlation_matrix_average_is_entrywise_mean() -> None:
    m1 = CorrelationMatrix(("a", "b"), np.array([[1.0, 0.2], [0.2, 1.0]]))
    m2 = CorrelationMatrix(("a", "b"), np.array([[1.0, 0.6], [0.6, 1.0]]))
    mean = CorrelationMatrix.average([m1, m2])
    assert mean.entry("a", "b") == pytest.approx(0.4)
    assert isinstance(mean, CorrelationMatrix)


def test_averaging_rejects_empty_or_mismatched_inputs() -> None:
    with pytest.raises(InputError, match="zero matrices"):
        CorrelationMatrix.average([])
    with pytest.raises(InputError, match="zero matrices"):
        OverlapMatrix.average([])
    with pytest.raises(InputError, match="different methods"):
        CorrelationMatrix.average(
            [CorrelationMatrix(("a", "b"), np.eye(2)), CorrelationMatrix(("a", "c"), np.eye(2))],
        )
    with pytest.raises(InputError, match="different levels"):
        OverlapMatrix.average([OverlapMatrix(("a", "b"), np.eye(2), 0.5), OverlapMatrix(("a", "b"), np.eye(2), 0.25)])


def test_jaccard_overlap_counts_shared_members() -> None:
    r1 = central_region_from_scores([1.0, 2.0, 3.0, 4.0], 0.5)
    r2 = central_region_from_scores([4.0, 1.0, 2.0, 3.0], 0.5)
    assert r1.member_indices.tolist() == [0, 1]
    assert r2.member_indices.tolist() == [1, 2]
    assert jaccard_overlap(r1, r2) == pytest.approx(1.0 / 3.0)
    assert jaccard_overlap(r1, r1) == 1.0


def test_jaccard_overlap_of_two_empty_regions_is_one() -> None:
    empty = CentralRegion(0.5, 0.0, np.array([], dtype=np.int64), 4)
    assert jaccard_overlap(empty, empty) == 1.0


def test_jaccard_overlap_rejects_regions_of_different_datasets() -> None:
    with pytest.raises(InputError, match="different datasets"):
        jaccard_overlap(central_region_from_scores([1, 2], 0.5), central_region_from_scores([1, 2, 3], 0.5))


def test_overlap_matrix_carries_level_and_serializes_it() -> None:
    regions = {
        "x": central_region_from_scores([1.0, 2.0, 3.0, 4.0], 0.5),
        "y": central_region_from_scores([4.0, 1.0, 2.0, 3.0], 0.5),
    }
    mat = overlap_matrix(regions)
    assert mat.alpha == 0.5  # noqa: PLR2004
    assert mat.to_dict() == {"methods": ["x", "y"], "values": [[1.0, 1.0 / 3.0], [1.0 / 3.0, 1.0]], "alpha": 0.5}


def test_overlap_matrix_rejects_mixed_levels() -> None:
    regions = {
        "x": central_region_from_scores([1.0, 2.0, 3.0, 4.0], 0.5),
        "y": central_region_from_scores([1.0, 2.0, 3.0, 4.0], 0.25),
    }
    with pytest.raises(InputError, match="one level"):
        overlap_matrix(regions)
