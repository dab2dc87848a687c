"""The sampled-sequence interface and the ordered worker map."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Protocol, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class Sampled(Protocol):
    """
    A lazily evaluated sequence.
    Implemented by OrientedReal, AlmostNatural and AlmostRational.
    """

    def at(self, n: int):
        """Value at index n."""
        ...

    def prefix(self, length: int) -> list:
        """The first length values."""
        ...


def map_ordered(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = 1) -> List[R]:
    """fn over items, on a thread pool when workers > 1; results keep input order."""
    items = list(items)
    if not workers or workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
