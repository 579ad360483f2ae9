"""Datasets, metrics, covariance, directions and order statistics."""

from .covariance import sample_covariance, validate_spd
from .dataset import Dataset, FloatArray, IntArray, as_points, as_vector
from .directions import coordinate_axes, sample_unit_directions
from .metric import Metric, MetricKind, distance, metric_from_name
from .order_stats import (
    coordinatewise_median,
    exceedance_fraction,
    lower_median,
    lower_order_statistic,
    lower_quantile,
    order_index,
    validate_level,
)

__all__ = [
    "Dataset",
    "FloatArray",
    "IntArray",
    "Metric",
    "MetricKind",
    "as_points",
    "as_vector",
    "coordinate_axes",
    "coordinatewise_median",
    "distance",
    "exceedance_fraction",
    "lower_median",
    "lower_order_statistic",
    "lower_quantile",
    "metric_from_name",
    "order_index",
    "sample_covariance",
    "sample_unit_directions",
    "validate_level",
    "validate_spd",
]
