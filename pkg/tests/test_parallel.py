"""Tests for depthkit.utils.parallel.ordered_map."""

import threading
import time

import pytest

from depthkit.utils import ordered_map


def test_ordered_map_returns_results_in_input_order_with_threads() -> None:
    def slow_square(x: int) -> int:
        time.sleep(0.001 * (10 - x))
        return x * x

    assert ordered_map(slow_square, range(10), threads=4) == [x * x for x in range(10)]


def test_ordered_map_runs_inline_for_single_thread() -> None:
    seen: list[str] = []
    ordered_map(lambda _: seen.append(threading.current_thread().name), range(3), threads=1)
    assert set(seen) == {threading.current_thread().name}, "threads=1 must not spawn workers"


def test_ordered_map_handles_empty_input() -> None:
    assert ordered_map(lambda x: x, [], threads=8) == []


def test_ordered_map_propagates_worker_exceptions() -> None:
    def boom(x: int) -> int:
        if x == 2:  # noqa: PLR2004
            msg = "bad item"
            raise ValueError(msg)
        return x

    with pytest.raises(ValueError, match="bad item"):
        ordered_map(boom, range(5), threads=3)
