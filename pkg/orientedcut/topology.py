"""The semi-metric on oriented reals and the two topologies built on it."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from .almost import AlmostRational, ar_embed, constant_almost_rational, min_almost_rational
from .approximation import approximate
from .errors import ConstructionError
from .executor import map_ordered
from .oriented import embed_rational, le, le_rational, lt, lt_rational
from .rational import as_rational, dyadic, render_rational
from .trilean import Trilean

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Signature:
    """Verdicts of delta < alpha for every delta of a reference list, in order."""

    entries: Tuple[Trilean, ...]

    @property
    def decided(self):
        return all(entry.decided for entry in self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "".join(entry.letter for entry in self.entries)


@dataclass(frozen=True)
class MetricWitness:
    """
    zeta and p with embed(zeta) <= alpha, beta <= embed(zeta) + p.

    ``index`` is the fuel the witness was built at; ``covers`` holds the
    values it was built for.
    """

    zeta: AlmostRational
    p: Fraction
    index: int
    covers: FrozenSet = field(default_factory=frozenset)

    def __post_init__(self):
        if self.p <= 0:
            raise ConstructionError("metric witness needs p > 0")

    def describe(self):
        return f"witness p={render_rational(self.p)} zeta({self.index})={render_rational(self.zeta.at(self.index))}"


def _positive(q, what="q"):
    q = as_rational(q)
    if q <= 0:
        raise ConstructionError(f"{what} must be positive, got {render_rational(q)}")
    return q


def _resolution_below(q):
    """Smallest k with 2 * 2**-k < q."""
    k = 0
    while 2 * dyadic(k) >= q:
        k += 1
    return k


def _lower_representative(x, k, fuel):
    """An almost rational below x: its exact supremum if known, else its 2**-k approximation."""
    sup = x.known_sup(fuel)
    if sup is not None:
        return constant_almost_rational(sup, lower_of=(x,))
    return approximate(x, k)


def d_check(alpha, beta, q, fuel):
    """
    d(alpha, beta, q): both values sit between embed(zeta) and embed(zeta) + p
    for some almost rational zeta and rational p <= q.

    :return: (verdict, witness or None)
    """
    q = _positive(q)
    k = _resolution_below(q)
    covers = frozenset((alpha, beta))
    if alpha.same_cut(beta):
        return Trilean.confirmed(note="origin"), MetricWitness(approximate(alpha, k), q, fuel, covers)

    upper_a, upper_b = alpha.upper_bound(fuel), beta.upper_bound(fuel)
    low_a, low_b = alpha.lower_estimate(fuel), beta.lower_estimate(fuel)
    top = max(upper_a, upper_b)
    gap = top - min(low_a, low_b)
    exact = alpha.known_sup(fuel) is not None and beta.known_sup(fuel) is not None
    if gap < q or (exact and gap <= q):
        slack = q - gap
        if slack > 0:
            while dyadic(k) > slack:
                k += 1
        zeta = min_almost_rational(_lower_representative(alpha, k, fuel),
                                   _lower_representative(beta, k, fuel))
        p = top - zeta.at(fuel)
        if p <= 0:
            p = q
        witness = MetricWitness(zeta, p, fuel, covers)
        return Trilean.confirmed(witness=witness), witness

    for lower_side, upper_side, bound in ((alpha, beta, upper_a), (beta, alpha, upper_b)):
        # separator r = bound: lower_side <= r, and r + q lies in the cut of upper_side
        verdict = lt_rational(bound + q, upper_side, fuel)
        sup = upper_side.known_sup(fuel)
        if verdict.is_confirmed or (sup is not None and sup > bound + q):
            return Trilean.refuted(note=f"separator r={render_rational(bound)}"), None
    return Trilean.unknown(fuel), None


def ball_member(beta, center, p, fuel):
    """beta in the ball of radius p around center."""
    _positive(p, "radius")
    verdict, _ = d_check(center, beta, p, fuel)
    return verdict


def validate_witness(alpha, beta, witness, fuel):
    """Check a metric witness against both values."""
    zeta, p = witness.zeta, witness.p
    embedded = ar_embed(zeta)
    checks = []
    for x in (alpha, beta):
        if any(y.same_cut(x) for y in zeta.lower_of):
            checks.append(Trilean.confirmed())
        else:
            checks.append(le(embedded, x, fuel))
        within = [h for y, h in zeta.within.items() if y.same_cut(x)]
        if within and min(within) <= p:
            checks.append(Trilean.confirmed())
        elif x.upper_bound(fuel) <= zeta.at(fuel) + p:
            checks.append(Trilean.confirmed())
        elif x.at(fuel) >= zeta.ceiling_at(fuel) + p:
            checks.append(Trilean.refuted(note="value escapes embed(zeta) + p"))
        else:
            checks.append(Trilean.unknown(fuel))
    return Trilean.all(checks)


def compose_witnesses(first, second):
    """
    Witness for the outer pair of alpha-beta and beta-delta witnesses:
    pointwise minimum and p1 + p2.
    """
    shared = [x for x in first.covers if any(x.same_cut(y) for y in second.covers)]
    if not shared:
        raise ConstructionError("witnesses share no value to chain through")
    p = first.p + second.p
    covers = first.covers | second.covers
    zeta = min_almost_rational(first.zeta, second.zeta, within={x: p for x in covers})
    return MetricWitness(zeta, p, max(first.index, second.index), covers)


def lt_signature(alpha, reference, fuel, workers=1):
    """Entry i is lt(reference[i], alpha)."""
    return Signature(tuple(map_ordered(lambda delta: lt(delta, alpha, fuel), reference, workers)))


def signatures_match(left, right):
    if len(left) != len(right):
        raise ConstructionError("signatures over different reference lists")
    for a, b in zip(left.entries, right.entries):
        if a.decided and b.decided and a != b:
            return Trilean.refuted()
    if left.decided and right.decided:
        return Trilean.confirmed()
    return Trilean.unknown()


def oriented_nbhd_member(beta, alpha, reference, fuel, workers=1):
    """beta has the same past as alpha, seen through the reference list."""
    return signatures_match(lt_signature(alpha, reference, fuel, workers),
                            lt_signature(beta, reference, fuel, workers))


def interval_open_member(beta, a, b, fuel):
    """beta in (a, b]."""
    a, b = as_rational(a), as_rational(b)
    if a >= b:
        raise ConstructionError(f"empty interval ({render_rational(a)}, {render_rational(b)}]")
    return lt_rational(a, beta, fuel) & le_rational(beta, b, fuel)


def open_interval_neighbourhood(a, b):
    """Reference list whose neighbourhoods cut (0, 1] at a and b."""
    a, b = as_rational(a), as_rational(b)
    if a >= b:
        raise ConstructionError(f"empty interval ({render_rational(a)}, {render_rational(b)}]")
    return [embed_rational(a), embed_rational(b)]
