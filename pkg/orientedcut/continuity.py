"""Executable continuity checks for total maps on the temporal interval (0, 1].

Maps are described by a closed family of descriptors, each total and
well-defined by construction. A modulus is a finite reference list E such that
inputs with equal signatures over E have equal outputs.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from .almost import AlmostNatural, an_eq, ar_embed, natural_to_rational, stabilization_probe, threshold_phi
from .errors import ConstructionError, UnsupportedOperationError
from .executor import map_ordered
from .oriented import embed_rational, shift
from .rational import as_rational, dyadic, render_rational
from .topology import d_check, oriented_nbhd_member

logger = logging.getLogger(__name__)

NATURAL = "natural"
REAL = "real"


@dataclass(frozen=True)
class ThresholdMap:
    thresholds: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(as_rational(d) for d in self.thresholds)
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ConstructionError("threshold map needs strictly ascending thresholds")
        object.__setattr__(self, "thresholds", values)

    codomain = NATURAL

    def apply(self, alpha):
        return threshold_phi(self.thresholds, alpha)

    def image_range(self):
        return Fraction(0), Fraction(len(self.thresholds))

    def render(self):
        return "phi([" + ",".join(render_rational(d) for d in self.thresholds) + "])"


@dataclass(frozen=True)
class ConstantMap:
    value: Fraction
    codomain: str = NATURAL

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))
        if self.codomain not in (NATURAL, REAL):
            raise ConstructionError(f"unknown codomain {self.codomain!r}")
        if self.codomain == NATURAL and (self.value.denominator != 1 or self.value < 0):
            raise ConstructionError("a constant almost natural must be a natural number")

    def apply(self, alpha):
        if self.codomain == REAL:
            return embed_rational(self.value)
        level = int(self.value)
        return AlmostNatural(lambda n: level, level, origin=("constant", level))

    def image_range(self):
        return self.value, self.value

    def render(self):
        if self.codomain == REAL:
            return f"const(hat({render_rational(self.value)}))"
        return f"const({self.value.numerator})"


@dataclass(frozen=True)
class ShiftMap:
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "offset", as_rational(self.offset))

    codomain = REAL

    def apply(self, alpha):
        return shift(alpha, self.offset)

    def image_range(self):
        return self.offset, 1 + self.offset

    def render(self):
        if self.offset == 0:
            return "identity"
        return f"shift({render_rational(self.offset)})"


IDENTITY = ShiftMap(0)


@dataclass(frozen=True)
class Composition:
    """Grid-level map on the 2**-n lines across the range of the inner map."""

    n: int
    inner: "Descriptor"

    def __post_init__(self):
        if self.n < 0:
            raise ConstructionError("grid resolution must be a natural number")

    codomain = NATURAL

    def grid(self):
        lo, hi = self.inner.image_range()
        h = dyadic(self.n)
        first = -((-lo) // h)
        lines = []
        q = first * h
        while q < hi:
            lines.append(q)
            q += h
        return tuple(lines)

    def apply(self, alpha):
        value = self.inner.apply(alpha)
        if isinstance(value, AlmostNatural):
            value = ar_embed(natural_to_rational(value))
        return threshold_phi(self.grid(), value)

    def image_range(self):
        return Fraction(0), Fraction(len(self.grid()))

    def render(self):
        return f"grid({self.n}, {self.inner.render()})"


Descriptor = Union[ThresholdMap, ConstantMap, ShiftMap, Composition]


def _inside_unit(points):
    unique = sorted({p for p in points if 0 < p < 1})
    return [embed_rational(p) for p in unique]


def _level_changes(descriptor):
    if isinstance(descriptor, ThresholdMap):
        return list(descriptor.thresholds)
    if isinstance(descriptor, ConstantMap):
        return []
    if isinstance(descriptor, Composition):
        inner = descriptor.inner
        if isinstance(inner, ShiftMap):
            return [q - inner.offset for q in descriptor.grid()]
        if isinstance(inner, ConstantMap):
            return []
        # an integer-valued inner map crosses a grid line at every jump
        return _level_changes(inner)
    raise UnsupportedOperationError(
        f"{descriptor.render()} has no analytic modulus: it needs an almost-natural codomain")


def ocp_modulus(descriptor):
    """Reference list E: embeddings of the points in (0, 1) where the output level changes."""
    return _inside_unit(_level_changes(descriptor))


def totalc_modulus(descriptor, n):
    """Modulus of the 2**-n grid-level map composed with descriptor."""
    return ocp_modulus(Composition(n, descriptor))


def scan_modulus(descriptor, grid, fuel):
    """
    Brute-force modulus: eventual output level at every 2**-grid point of
    (0, 1], reporting the grid point just before each change.
    """
    if descriptor.codomain != NATURAL:
        raise UnsupportedOperationError(f"{descriptor.render()} needs an almost-natural codomain")
    h = dyadic(grid)
    points = [h * i for i in range(1, 2 ** grid + 1)]

    def level(t):
        probe = stabilization_probe(descriptor.apply(embed_rational(t)), fuel)
        if not probe.verdict.is_confirmed:
            logger.warning("level at %s did not settle within fuel %d", render_rational(t), fuel)
        return probe.limit

    levels = [level(t) for t in points]
    changes = [points[i - 1] for i in range(1, len(points)) if levels[i] != levels[i - 1]]
    return _inside_unit(changes)


@dataclass(frozen=True)
class HarnessEntry:
    status: str
    pair_id: str
    detail: str

    def render(self):
        return f"{self.status} {self.pair_id} {self.detail}"


@dataclass
class HarnessReport:
    entries: List[HarnessEntry] = field(default_factory=list)

    def count(self, status):
        return sum(1 for entry in self.entries if entry.status == status)

    @property
    def total(self):
        return len(self.entries)

    @property
    def passed(self):
        return self.count("PASS")

    @property
    def failed(self):
        return self.count("FAIL")

    @property
    def undecided(self):
        return self.count("UNDECIDED")

    def summary(self):
        return f"total={self.total} pass={self.passed} fail={self.failed} undecided={self.undecided}"

    def lines(self):
        return [entry.render() for entry in self.entries] + [self.summary()]

    def render(self):
        return "\n".join(self.lines()) + "\n"


def _pair_check(pair, reference, fuel, judge):
    membership = oriented_nbhd_member(pair.right, pair.left, reference, fuel)
    if membership.is_unknown:
        return HarnessEntry("UNDECIDED", pair.pair_id, "signature undecided")
    if membership.is_refuted:
        return HarnessEntry("PASS", pair.pair_id, "separated")
    return judge(pair)


def verify_modulus(descriptor, reference, pairs, fuel, workers=1):
    """Neighbouring inputs (equal signatures over reference) must have equal outputs."""
    def judge(pair):
        verdict = an_eq(descriptor.apply(pair.left), descriptor.apply(pair.right), fuel)
        if verdict.is_refuted:
            return HarnessEntry("FAIL", pair.pair_id, "outputs differ")
        return HarnessEntry("PASS", pair.pair_id, f"outputs {verdict}")

    entries = map_ordered(lambda pair: _pair_check(pair, reference, fuel, judge), list(pairs), workers)
    return HarnessReport(list(entries))


def verify_totalc(descriptor, n, reference, pairs, fuel, workers=1):
    """Neighbouring inputs must have outputs within 2**-n of each other."""
    q = dyadic(n)

    def judge(pair):
        verdict, witness = d_check(descriptor.apply(pair.left), descriptor.apply(pair.right), q, fuel)
        if verdict.is_refuted:
            return HarnessEntry("FAIL", pair.pair_id, f"d at {render_rational(q)} {verdict}")
        detail = f"d at {render_rational(q)} {verdict}"
        if witness is not None:
            detail += f" p={render_rational(witness.p)}"
        return HarnessEntry("PASS", pair.pair_id, detail)

    entries = map_ordered(lambda pair: _pair_check(pair, reference, fuel, judge), list(pairs), workers)
    return HarnessReport(list(entries))
