"""Approximation by almost rationals, suprema, finite infima and monotone limits."""

import logging
from fractions import Fraction

from .almost import AlmostRational
from .errors import ConstructionError, PreconditionError
from .oriented import OrientedReal, cut_from_bounded_sequence, embed_rational, le
from .rational import RationalProgression, as_rational, dyadic, grid_floor, render_rational
from .sequences import CyclicRule, LazySequence, Recurrence

logger = logging.getLogger(__name__)


def approximate(beta, n):
    """
    Almost rational zeta on the 2**-n grid above beta(0) with
    zeta(k) <= beta(k) < zeta(k) + 2**-n for every k.

    Results are cached on beta, so repeated calls share one memo.
    """
    if n < 0:
        raise ConstructionError(f"approximation resolution must be a natural number, got {n}")
    return beta.derived(("approximate", n), lambda: _approximate(beta, n))


def _approximate(beta, n):
    h = dyadic(n)
    start = beta.at(0)

    def step(k, prev):
        if prev is None:
            return start
        return prev + h * grid_floor(beta.at(k) - prev, h)

    values = RationalProgression.below(start, h, beta.strict_bound)

    def ceiling(fuel):
        # zeta(k) <= beta(k) < upper_bound, so only grid points below it occur
        steps = -((start - beta.upper_bound(fuel)) // h) - 1
        return start + h * max(steps, 0)

    return AlmostRational(Recurrence(step), values, ceiling=ceiling,
                          origin=("approximate", beta.origin, n),
                          lower_of=(beta,), within={beta: h})


def sandwich_holds(beta, n, length):
    """zeta(k) <= beta(k) < zeta(k) + 2**-n for every k < length."""
    zeta = approximate(beta, n)
    h = dyadic(n)
    for k in range(length):
        b, z = beta.at(k), zeta.at(k)
        if not z <= b < z + h:
            logger.debug("sandwich broken at index %d: %s, %s", k, z, b)
            return False
    return True


def sup_enumerated(gamma, bound, attained=None):
    """
    Supremum of the set enumerated by gamma (every gamma(n) < bound).

    ``attained`` may certify the largest enumerated value when it is known.
    """
    if attained is not None:
        attained = as_rational(attained)
    return cut_from_bounded_sequence(gamma, bound, origin_tag="sup", sup=attained)


def sup_of_values(values, bound):
    """Supremum of a finite list, enumerated cyclically."""
    values = tuple(as_rational(v) for v in values)
    if not values:
        raise ConstructionError("sup of an empty list")
    bound = as_rational(bound)
    top = max(values)
    if top >= bound:
        raise ConstructionError(
            f"listed value {render_rational(top)} is not below the bound {render_rational(bound)}")
    return sup_enumerated(CyclicRule(values), bound, attained=top)


def inf_finite(values):
    """Infimum of a finite nonempty list, as the embedding of its minimum."""
    values = [as_rational(v) for v in values]
    if not values:
        raise ConstructionError("inf of an empty list")
    return embed_rational(min(values))


def monotone_limit(seq, bound, fuel, span=16):
    """
    Limit of a nondecreasing sequence of oriented reals bounded by ``bound``.

    ``seq`` is a rule i -> OrientedReal or a finite list, which continues with
    its last element. The first ``span`` neighbours are spot-checked for
    le(alpha_i, alpha_{i+1}) before anything is built; bounds are checked as
    members come into use.
    """
    bound = as_rational(bound)
    if isinstance(seq, (list, tuple)):
        items = list(seq)
        if not items:
            raise ConstructionError("limit of an empty list")
        rule = lambda i: items[min(i, len(items) - 1)]
        origin = ("limit", tuple(item.origin for item in items), bound)
    else:
        rule = seq
        origin = ("limit", seq, bound)

    members = _Members(rule, bound)
    for i in range(span):
        verdict = le(members.at(i), members.at(i + 1), fuel)
        if verdict.is_refuted:
            raise PreconditionError(f"limit sequence decreases between index {i} and {i + 1}", index=i)

    def top(k, prev):
        current = max(members.at(i).at(k) for i in range(k + 1))
        return current if prev is None else max(prev, current)

    diagonal = Recurrence(top)
    sup = None
    if isinstance(seq, (list, tuple)):
        def sup(f):
            sups = [item.known_sup(f) for item in items]
            return None if any(s is None for s in sups) else max(sups)

    return OrientedReal(lambda k: diagonal.at(k) - Fraction(1, k + 1), bound,
                        origin=origin, sup=sup)


class _Members(LazySequence):
    """Memo of limit members; each is checked against the common bound."""

    def __init__(self, rule, bound):
        super().__init__(rule)
        self.bound = bound

    def _validate(self, k, value):
        if not isinstance(value, OrientedReal):
            raise PreconditionError(f"limit member {k} is not an oriented real", index=k)
        if value.strict_bound > self.bound:
            raise PreconditionError(
                f"limit member {k} has bound {render_rational(value.strict_bound)} above "
                f"{render_rational(self.bound)}", index=k)
