"""Memoized, lazily validated sequences."""

import bisect
import threading


class LazySequence:
    """
    Values of a pure rule ``n -> value``, evaluated in index order and kept.

    The prefix is always extended in order so every index is validated exactly
    once, right after it is first computed. Concurrent readers see one
    canonical prefix.
    """

    def __init__(self, rule=None):
        self.rule = rule
        self._memo = []
        self._lock = threading.RLock()

    def __call__(self, n):
        return self.at(n)

    def at(self, n):
        if n < 0:
            raise IndexError(f"negative index {n}")
        memo = self._memo
        if n < len(memo):
            return memo[n]
        with self._lock:
            while len(memo) <= n:
                k = len(memo)
                value = self._compute(k)
                self._validate(k, value)
                memo.append(value)
            return memo[n]

    def _compute(self, k):
        return self.rule(k)

    def _validate(self, k, value):
        """Hook for subclasses; raise when value breaks the invariant at k."""

    @property
    def evaluated(self):
        return len(self._memo)

    def prefix(self, length):
        if length <= 0:
            return []
        self.at(length - 1)
        return self._memo[:length]

    def first_index_above(self, q, fuel):
        """Smallest n <= fuel with value(n) > q, or None. Needs a sorted prefix."""
        self.at(fuel)
        n = bisect.bisect_right(self._memo, q, 0, fuel + 1)
        return n if n <= fuel else None

    def first_index_at_least(self, q, fuel):
        """Smallest n <= fuel with value(n) >= q, or None. Needs a sorted prefix."""
        self.at(fuel)
        n = bisect.bisect_left(self._memo, q, 0, fuel + 1)
        return n if n <= fuel else None


class Recurrence(LazySequence):
    """value(k) = step(k, value(k-1)), with value(-1) taken as None; usable as an index rule."""

    def __init__(self, step):
        super().__init__()
        self.step = step

    def _compute(self, k):
        return self.step(k, self._memo[k - 1] if k else None)


class CyclicRule:
    """Enumerates a finite nonempty tuple cyclically. Equal tuples give equal rules."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        if not values:
            raise ValueError("cyclic rule needs at least one value")
        self.values = values

    def __call__(self, n):
        return self.values[n % len(self.values)]

    def __eq__(self, other):
        return isinstance(other, CyclicRule) and self.values == other.values

    def __hash__(self):
        return hash(("cyclic", self.values))

    def __repr__(self):
        return f"CyclicRule({self.values!r})"
