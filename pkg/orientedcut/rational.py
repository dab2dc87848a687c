"""Exact rational helpers shared by every other module.

Rationals are plain :class:`fractions.Fraction` values; they are immutable,
canonical and arbitrary precision, so nothing here wraps them.
"""

import math
import re
from collections.abc import Sequence
from fractions import Fraction

from .errors import ConstructionError

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def rat_normalize(n, d=1):
    """Return the canonical rational n/d.

    :raises ConstructionError: when d is zero
    """
    if d == 0:
        raise ConstructionError("zero denominator")
    return Fraction(int(n), int(d))


def as_rational(value):
    """Coerce ints, Fractions and "p/q" text to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_rational(text):
    """Parse "p/q" or "p". Decimal forms are rejected."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ConstructionError(f"malformed rational {text!r}")
    return rat_normalize(int(match.group(1)), int(match.group(2) or 1))


def render_rational(q):
    """Render as "p/q"; integers keep the "/1"."""
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def grid_floor(x, step):
    """The integer t with step*t <= x < step*(t+1)."""
    if step <= 0:
        raise ConstructionError(f"grid step must be positive, got {render_rational(step)}")
    return math.floor(Fraction(x) / Fraction(step))


def dyadic(k):
    """2**-k as a rational."""
    return Fraction(1, 2 ** k)


def midpoint(a, b):
    return (Fraction(a) + Fraction(b)) / 2


class RationalProgression(Sequence):
    """Finite arithmetic progression start, start+step, ... (count terms).

    Used as the declared value set of approximations, whose length can be
    large while membership must stay cheap.
    """

    __slots__ = ("start", "step", "count")

    def __init__(self, start, step, count):
        if step <= 0:
            raise ConstructionError("progression step must be positive")
        if count < 1:
            raise ConstructionError("progression must be nonempty")
        self.start = Fraction(start)
        self.step = Fraction(step)
        self.count = int(count)

    @classmethod
    def below(cls, start, step, bound):
        """Every start + step*t (t >= 0) strictly below bound."""
        start, step, bound = Fraction(start), Fraction(step), Fraction(bound)
        if start >= bound:
            raise ConstructionError("progression start must lie below its bound")
        count = math.ceil((bound - start) / step)
        return cls(start, step, count)

    @property
    def maximum(self):
        return self.start + self.step * (self.count - 1)

    def __len__(self):
        return self.count

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(self.count))]
        if index < 0:
            index += self.count
        if not 0 <= index < self.count:
            raise IndexError(index)
        return self.start + self.step * index

    def __contains__(self, value):
        if isinstance(value, (bool, float, str)):
            return False
        try:
            offset = (Fraction(value) - self.start) / self.step
        except (TypeError, ValueError):
            return False
        return offset.denominator == 1 and 0 <= offset < self.count

    def __eq__(self, other):
        if isinstance(other, RationalProgression):
            return (self.start, self.step, self.count) == (other.start, other.step, other.count)
        return NotImplemented

    def __hash__(self):
        return hash((self.start, self.step, self.count))

    def __repr__(self):
        return (f"RationalProgression({render_rational(self.start)}, "
                f"{render_rational(self.step)}, {self.count})")


def top_value(values):
    """Largest element of an ascending value set."""
    maximum = getattr(values, "maximum", None)
    return maximum if maximum is not None else values[-1]


class UnionValues(Sequence):
    """Ascending union of ascending value sets; materialized only when indexed."""

    def __init__(self, *parts):
        self.parts = tuple(parts)
        self._merged = None

    @property
    def maximum(self):
        return max(top_value(part) for part in self.parts)

    def _materialize(self):
        if self._merged is None:
            merged = set()
            for part in self.parts:
                merged.update(part)
            self._merged = sorted(merged)
        return self._merged

    def __len__(self):
        return len(self._materialize())

    def __getitem__(self, index):
        if index == -1:
            return self.maximum
        return self._materialize()[index]

    def __contains__(self, value):
        return any(value in part for part in self.parts)

    def __eq__(self, other):
        if isinstance(other, UnionValues):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)
