"""Thread-safe memo for sequences defined by a recurrence."""

import logging
import threading
from typing import Callable, Generic, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


class RecurrenceCache(Generic[T]):
    """Memoized sequence a(0), a(1), ... shared between worker threads.

    ``step(n, known)`` computes a(n) from the already known prefix
    ``known = [a(0), ..., a(n-1)]``. The first ``len(seeds)`` terms are given.
    """

    def __init__(self, name: str, seeds: Sequence[T], step: Callable[[int, List[T]], T]):
        self.name = name
        self._seeds = list(seeds)
        self._step = step
        self._values: List[T] = list(seeds)
        self._lock = threading.Lock()

    def get(self, n: int) -> T:
        """Return a(n), extending the memo if needed."""
        if n < 0:
            raise IndexError(f"{self.name}: negative index {n}")
        with self._lock:
            if n >= len(self._values):
                logger.debug(f"{self.name}: extending memo from {len(self._values)} to {n + 1}")
                while len(self._values) <= n:
                    self._values.append(self._step(len(self._values), self._values))
            return self._values[n]

    def prefix(self, count: int) -> List[T]:
        """Return [a(0), ..., a(count-1)]."""
        if count <= 0:
            return []
        self.get(count - 1)
        with self._lock:
            return self._values[:count]

    def __len__(self) -> int:
        with self._lock:
            return len(self._values)

    def clear(self) -> None:
        """Drop memoized terms beyond the seeds."""
        with self._lock:
            self._values = list(self._seeds)
