"""Order-preserving thread fan-out for numpy-heavy work."""

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

_T = TypeVar("_T")
_R = TypeVar("_R")


def ordered_map(
    fn: Callable[[_T], _R],
    items: Iterable[_T],
    threads: int = 1,
) -> list[_R]:
    """Apply ``fn`` to every item, returning results in input order.

    Results never depend on ``threads``: each item is computed independently
    and the caller reduces the list in index order.

    Args:
        fn: Pure function of one item.
        items: Work items.
        threads: Worker count; 1 or less runs inline.

    Returns:
        list: ``[fn(item) for item in items]``.

    """
    work = list(items)
    if threads <= 1 or len(work) <= 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=min(threads, len(work))) as pool:
        return list(pool.map(fn, work))
