"""Membership probe into the two-sided reals and the arithmetic relations.

Addition and multiplication are relations between three oriented reals; the
constructors below pick one canonical third value where that is possible.
Relation checks can only ever refute: agreeing on finitely many grid points
says nothing about the rest of the cut.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ConstructionError, PreconditionError, UnsupportedOperationError
from .executor import map_ordered
from .oriented import OrientedReal, commutative_origin, lt_rational
from .rational import as_rational, midpoint, render_rational
from .trilean import Trilean

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridProbe:
    """Rational test grid lo, lo+step, ... up to hi."""

    lo: Fraction
    hi: Fraction
    step: Fraction

    def __post_init__(self):
        for name in ("lo", "hi", "step"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.step <= 0:
            raise ConstructionError("probe step must be positive")
        if self.lo >= self.hi:
            raise ConstructionError(
                f"degenerate probe: lo {render_rational(self.lo)} is not below hi {render_rational(self.hi)}")
        if (self.hi - self.lo) / self.step < 2:
            raise ConstructionError("degenerate probe: fewer than two cells")

    def points(self):
        count = int((self.hi - self.lo) // self.step)
        return [self.lo + self.step * i for i in range(count + 1)]


class ProbeCell(NamedTuple):
    q: Fraction
    relation: Trilean
    cut: Trilean


def psi_member(r, alpha, fuel):
    """r lies below some member of the cut; the double negation is read as plain search."""
    r = as_rational(r)
    n = alpha.first_index_above(r, fuel)
    if n is not None:
        return Trilean.confirmed(note="MP", witness=midpoint(r, alpha.at(n)))
    if r >= alpha.upper_bound(fuel):
        return Trilean.refuted()
    return Trilean.unknown(fuel, note="MP")


def psi_separator(alpha, beta, probe, fuel):
    """First grid rational inside the image of beta and outside that of alpha, or None."""
    for q in probe.points():
        if psi_member(q, beta, fuel).is_confirmed and psi_member(q, alpha, fuel).is_refuted:
            return q
    return None


def _sum_of_sups(alpha, beta):
    def sup(fuel):
        a, b = alpha.known_sup(fuel), beta.known_sup(fuel)
        return None if a is None or b is None else a + b
    return sup


def add(alpha, beta):
    """gamma(n) = alpha(n) + beta(n)."""
    upper = None
    if alpha.upper_rule is not None and beta.upper_rule is not None:
        upper = lambda n: alpha.upper_at(n) + beta.upper_at(n)
    return OrientedReal(lambda n: alpha.at(n) + beta.at(n),
                        alpha.strict_bound + beta.strict_bound, upper,
                        origin=commutative_origin("add", alpha, beta), sup=_sum_of_sups(alpha, beta),
                        ceiling=lambda fuel: alpha.upper_bound(fuel) + beta.upper_bound(fuel),
                        tight_upper=alpha.tight_upper and beta.tight_upper)


def mul_positive(alpha, beta):
    """gamma(n) = alpha(n) * beta(n) on the nonnegative cone."""
    for side, value in (("alpha", alpha), ("beta", beta)):
        if value.at(0) < 0:
            raise PreconditionError(
                f"mul_positive needs {side}(0) >= 0, got {render_rational(value.at(0))}", index=0)
    upper = None
    if alpha.upper_rule is not None and beta.upper_rule is not None:
        upper = lambda n: alpha.upper_at(n) * beta.upper_at(n)

    def sup(fuel):
        a, b = alpha.known_sup(fuel), beta.known_sup(fuel)
        return None if a is None or b is None else a * b

    return OrientedReal(lambda n: alpha.at(n) * beta.at(n),
                        alpha.strict_bound * beta.strict_bound, upper,
                        origin=commutative_origin("mul", alpha, beta), sup=sup,
                        ceiling=lambda fuel: alpha.upper_bound(fuel) * beta.upper_bound(fuel),
                        tight_upper=alpha.tight_upper and beta.tight_upper)


def neg_twosided(alpha):
    """
    n -> -upper(n) - 1/(n+1) for a two-sided value. The gap upper(n) - alpha(n)
    never grows: the upper rule is validated nonincreasing and alpha increases.
    """
    if alpha.upper_rule is None:
        raise UnsupportedOperationError("negation needs a two-sided value with an upper rule")

    def rule(n):
        return -alpha.upper_at(n) - Fraction(1, n + 1)

    def sup(fuel):
        if not alpha.tight_upper:
            return None
        s = alpha.known_sup(fuel)
        return None if s is None else -s

    return OrientedReal(rule, -alpha.at(0) + 1, lambda n: -alpha.at(n),
                        origin=("neg", alpha.origin), sup=sup, tight_upper=alpha.tight_upper)


def sum_member(q, alpha, beta, fuel):
    """q in the sum of the two cuts."""
    if q < alpha.at(fuel) + beta.at(fuel):
        return Trilean.confirmed()
    if q >= alpha.upper_bound(fuel) + beta.upper_bound(fuel):
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def product_member(q, alpha, beta, fuel):
    """q in the product of the two cuts, from the corner products of the known intervals."""
    a_lo, a_hi = alpha.at(fuel), alpha.upper_bound(fuel)
    b_lo, b_hi = beta.at(fuel), beta.upper_bound(fuel)
    corners = (a_lo * b_lo, a_lo * b_hi, a_hi * b_lo, a_hi * b_hi)
    if q < min(corners):
        return Trilean.confirmed()
    if q >= max(corners):
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def _check_relation(member, gamma, probe, fuel, workers):
    if not isinstance(probe, GridProbe):
        raise ConstructionError("relation checks need a GridProbe")

    def cell(q):
        return ProbeCell(q, member(q), psi_member(q, gamma, fuel))

    cells = map_ordered(cell, probe.points(), workers)
    for c in cells:
        if c.relation.decided and c.cut.decided and c.relation != c.cut:
            note = (f"q={render_rational(c.q)}: relation {c.relation}, "
                    f"cut {c.cut}")
            logger.debug("relation refuted at %s", note)
            return Trilean.refuted(note=note, witness=tuple(cells))
    decided = sum(1 for c in cells if c.relation.decided and c.cut.decided)
    return Trilean.unknown(fuel, note=f"{decided}/{len(cells)} cells agree, rest open", witness=tuple(cells))


def check_add(alpha, beta, gamma, probe, fuel, workers=1):
    """Refuted when a grid point separates the sum of alpha and beta from gamma."""
    return _check_relation(lambda q: sum_member(q, alpha, beta, fuel), gamma, probe, fuel, workers)


def check_mul(alpha, beta, gamma, probe, fuel, workers=1):
    """Refuted when a grid point separates the product of alpha and beta from gamma."""
    return _check_relation(lambda q: product_member(q, alpha, beta, fuel), gamma, probe, fuel, workers)


def probe_agreement(alpha, beta, probe, fuel, workers=1):
    """Cut comparison on a grid: Refuted on a decided disagreement, else Unknown."""
    def cell(q):
        return ProbeCell(q, lt_rational(q, alpha, fuel), lt_rational(q, beta, fuel))

    for c in map_ordered(cell, probe.points(), workers):
        if c.relation.decided and c.cut.decided and c.relation != c.cut:
            return Trilean.refuted(note=f"q={render_rational(c.q)}")
    return Trilean.unknown(fuel)
