"""Pytest fixtures shared across the test suite."""

from __future__ import annotations

import logging
from collections.abc import Iterator

import numpy as np
import pytest

from depthkit.geometry import Dataset


@pytest.fixture(autouse=True)
def _restore_depthkit_logger() -> Iterator[None]:
    """CLI runs install a non-propagating handler; undo it so caplog keeps working."""
    logger = logging.getLogger("depthkit")
    handlers, propagate, level = list(logger.handlers), logger.propagate, logger.level
    yield
    logger.handlers[:] = handlers
    logger.propagate = propagate
    logger.setLevel(level)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def square_corners() -> Dataset:
    return Dataset.from_array([[1, 1], [1, -1], [-1, 1], [-1, -1]])


@pytest.fixture
def gaussian_2d(rng: np.random.Generator) -> Dataset:
    return Dataset.from_array(rng.standard_normal((400, 2)))
