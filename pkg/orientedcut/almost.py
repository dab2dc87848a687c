"""Almost natural and almost rational numbers.

Both are nondecreasing sequences that can only take finitely many values, so
they settle eventually, but no finite prefix says when. The declared cap (or
value set) is what makes a universal claim about them checkable.
"""

import bisect
from fractions import Fraction
from typing import NamedTuple

from .errors import ConstructionError, MalformedRealError
from .oriented import OrientedReal
from .rational import RationalProgression, UnionValues, as_rational, render_rational, top_value
from .sequences import LazySequence
from .trilean import Trilean


class AlmostNatural(LazySequence):
    """
    Nondecreasing natural-valued sequence bounded by cap.

    ``ceiling`` is an optional callable fuel -> certified bound <= cap that
    some constructors can supply once enough is known about their input.
    """

    def __init__(self, rule, cap, *, ceiling=None, origin=None):
        super().__init__(rule)
        if cap < 0:
            raise ConstructionError(f"cap must be a natural number, got {cap}")
        self.cap = int(cap)
        self._ceiling = ceiling
        self.origin = origin if origin is not None else ("almost-natural", rule, self.cap)

    def _compute(self, k):
        return int(self.rule(k))

    def _validate(self, k, value):
        if value < 0 or value > self.cap:
            raise MalformedRealError(f"value {value} at index {k} leaves 0..{self.cap}", index=k)
        if k and value < self._memo[k - 1]:
            raise MalformedRealError(f"almost natural decreases at index {k}", index=k)

    def ceiling_at(self, fuel):
        if self._ceiling is None:
            return self.cap
        ceiling = self._ceiling(fuel)
        return self.cap if ceiling is None else min(self.cap, ceiling)

    def __repr__(self):
        return f"AlmostNatural(cap={self.cap})"


class AlmostRational(LazySequence):
    """
    Nondecreasing rational sequence whose image lies in a finite value set.

    ``lower_of`` lists oriented reals X with embed(zeta) <= X by construction;
    ``within`` maps oriented reals X to h with sup X <= lim zeta + h.
    """

    def __init__(self, rule, values, *, ceiling=None, origin=None, lower_of=(), within=None):
        super().__init__(rule)
        if isinstance(values, (list, tuple)):
            values = tuple(as_rational(v) for v in values)
            if not values:
                raise ConstructionError("value set must be nonempty")
            if any(a >= b for a, b in zip(values, values[1:])):
                raise ConstructionError("value set must be strictly ascending")
        self.values = values
        self._ceiling = ceiling
        self.origin = origin if origin is not None else ("almost-rational", rule, values)
        self.lower_of = frozenset(lower_of)
        self.within = dict(within or {})

    def _compute(self, k):
        return Fraction(self.rule(k))

    def _validate(self, k, value):
        if value not in self.values:
            raise MalformedRealError(
                f"value {render_rational(value)} at index {k} is outside the declared value set", index=k)
        if k and value < self._memo[k - 1]:
            raise MalformedRealError(f"almost rational decreases at index {k}", index=k)

    @property
    def max_value(self):
        return top_value(self.values)

    def ceiling_at(self, fuel):
        if self._ceiling is None:
            return self.max_value
        ceiling = self._ceiling(fuel)
        return self.max_value if ceiling is None else min(self.max_value, ceiling)

    def __repr__(self):
        return f"AlmostRational(max={render_rational(self.max_value)})"


def _capped_le(left, right, fuel):
    """Shared shape of an_le / ar_le: compare against the other side's ceiling."""
    n = right.first_index_at_least(left.ceiling_at(fuel), fuel)
    if n is not None:
        return Trilean.confirmed(witness=n)
    if left.at(fuel) > right.ceiling_at(fuel):
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def an_le(xi, nu, fuel):
    return _capped_le(xi, nu, fuel)


def an_eq(xi, nu, fuel):
    return an_le(xi, nu, fuel) & an_le(nu, xi, fuel)


def ar_le(zeta, zeta_prime, fuel):
    return _capped_le(zeta, zeta_prime, fuel)


def ar_eq(zeta, zeta_prime, fuel):
    return ar_le(zeta, zeta_prime, fuel) & ar_le(zeta_prime, zeta, fuel)


class Stabilization(NamedTuple):
    limit: int
    since_index: int
    verdict: Trilean


def stabilization_probe(xi, fuel):
    """Last observed value and where it started; Confirmed once the ceiling is reached."""
    value = xi.at(fuel)
    since = xi.first_index_at_least(value, fuel)
    if value >= xi.ceiling_at(fuel):
        return Stabilization(value, since, Trilean.confirmed())
    return Stabilization(value, since, Trilean.unknown(fuel))


def _ascending(thresholds):
    thresholds = tuple(as_rational(d) for d in thresholds)
    for i, (a, b) in enumerate(zip(thresholds, thresholds[1:]), 1):
        if a >= b:
            raise ConstructionError(
                f"thresholds must be strictly ascending: {render_rational(a)} >= {render_rational(b)} "
                f"at position {i}")
    return thresholds


def threshold_phi(thresholds, beta):
    """n -> number of thresholds d with d <= beta(n); 0 at index 0; cap = len(thresholds)."""
    d = _ascending(thresholds)

    def rule(n):
        if n == 0:
            return 0
        return bisect.bisect_right(d, beta.at(n))

    # beta(n) < upper_bound, so no threshold at or above it is ever passed
    return AlmostNatural(rule, len(d),
                         ceiling=lambda fuel: bisect.bisect_left(d, beta.upper_bound(fuel)),
                         origin=("phi", d, beta.origin))


def phi_by_scanning(thresholds, beta):
    """
    The same values as threshold_phi, produced by walking time forward and
    testing each threshold in turn; yields forever.
    """
    d = _ascending(thresholds)
    yield 0
    t = 1
    for i, threshold in enumerate(d, 1):
        while beta.at(t) < threshold:
            yield i - 1
            t += 1
    while True:
        yield len(d)


def natural_to_rational(xi):
    """View an almost natural as an almost rational over 0..cap."""
    return AlmostRational(lambda n: xi.at(n), RationalProgression(0, 1, xi.cap + 1),
                          ceiling=xi.ceiling_at, origin=("natural", xi.origin))


def constant_almost_rational(value, lower_of=()):
    value = as_rational(value)
    return AlmostRational(lambda n: value, (value,), origin=("constant", value), lower_of=lower_of)


def min_almost_rational(zeta, zeta_prime, within=None):
    """Pointwise minimum; sits below everything either side sits below."""
    if zeta.origin == zeta_prime.origin:
        origin = zeta.origin
    else:
        origin = ("min", frozenset((zeta.origin, zeta_prime.origin)))
    return AlmostRational(lambda n: min(zeta.at(n), zeta_prime.at(n)),
                          UnionValues(zeta.values, zeta_prime.values),
                          ceiling=lambda fuel: min(zeta.ceiling_at(fuel), zeta_prime.ceiling_at(fuel)),
                          origin=origin, lower_of=zeta.lower_of | zeta_prime.lower_of,
                          within=within)


def ar_embed(zeta):
    """n -> zeta(n) - 1/(n+1), bounded by the top of the value set."""
    top = zeta.max_value

    def sup(fuel):
        value = zeta.at(fuel)
        return value if value >= zeta.ceiling_at(fuel) else None

    return OrientedReal(lambda n: zeta.at(n) - Fraction(1, n + 1), top, lambda n: top,
                        origin=("embed", zeta.origin), sup=sup, ceiling=zeta.ceiling_at)
