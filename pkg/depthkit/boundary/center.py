"""Rules for choosing the point v at which boundary geometry is evaluated."""

from __future__ import annotations

from enum import StrEnum

import numpy as np

from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric, coordinatewise_median
from depthkit.mmad import phi_minimizer


class CenterRule(StrEnum):
    """Data-driven centers."""

    MEDIAN = "median"
    MEAN = "mean"
    MINIMIZER = "minimizer"


def parse_center_rule(name: str) -> CenterRule:
    """CenterRule from its command-line name."""
    try:
        return CenterRule(name.lower())
    except ValueError:
        choices = ", ".join(r.value for r in CenterRule)
        msg = f"unknown center rule {name!r}; choose one of {choices}"
        raise InputError(msg) from None


def locate_center(rule: CenterRule | str, data: Dataset, m: Metric, threads: int = 1) -> FloatArray:
    """Coordinatewise lower median, coordinatewise mean, or the Φ minimizer."""
    rule = parse_center_rule(str(rule))
    if rule is CenterRule.MEDIAN:
        return coordinatewise_median(data.values)
    if rule is CenterRule.MEAN:
        return np.mean(data.values, axis=0)
    return phi_minimizer(data, m, threads).location
