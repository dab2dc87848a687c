"""Oriented reals and their fuel-bounded order calculus.

An oriented real is a strictly increasing rational sequence with a declared
strict upper bound; it stands for the left cut {q : q < alpha(n) for some n}.
Existential claims are settled by searching indices 0..fuel. Universal claims
are only settled through declared bounds and certificates, never by sampling.
"""

import logging
import threading
from fractions import Fraction

from .errors import MalformedRealError
from .rational import as_rational, render_rational
from .sequences import LazySequence, Recurrence
from .trilean import Trilean

logger = logging.getLogger(__name__)


def _constant(value):
    return lambda fuel: value


class _UpperSequence(LazySequence):
    """Nonincreasing upper co-sequence, checked against its owner."""

    def __init__(self, owner, rule):
        super().__init__(rule)
        self.owner = owner

    def _compute(self, k):
        return Fraction(self.rule(k))

    def _validate(self, k, value):
        if k and value > self._memo[k - 1]:
            raise MalformedRealError(f"upper rule increases at index {k}", index=k)
        if self.owner.at(k) >= value:
            raise MalformedRealError(f"upper rule does not stay above the sequence at index {k}", index=k)


class OrientedReal(LazySequence):
    """
    One oriented cut.

    :param rule: pure total rule from index to rational
    :param strict_bound: rational M with rule(n) < M for every n
    :param upper_rule: optional nonincreasing rule with rule(n) < upper_rule(n)
    :param origin: hashable construction key; equal keys denote equal cuts
    :param sup: exact supremum, or a callable fuel -> supremum-or-None
    :param ceiling: callable fuel -> strict upper bound or None
    :param tight_upper: upper_rule converges to the supremum
    """

    def __init__(self, rule, strict_bound, upper_rule=None, *, origin=None, sup=None,
                 ceiling=None, tight_upper=False, label=None):
        super().__init__(rule)
        self.strict_bound = as_rational(strict_bound)
        self.upper_rule = _UpperSequence(self, upper_rule) if upper_rule is not None else None
        self.origin = origin if origin is not None else ("rule", rule, self.strict_bound)
        if sup is not None and not callable(sup):
            sup = _constant(as_rational(sup))
        self._sup = sup
        self._ceiling = ceiling
        self.tight_upper = bool(tight_upper and upper_rule is not None)
        self.label = label
        self._derived = {}
        self._derived_lock = threading.Lock()

    def _compute(self, k):
        return Fraction(self.rule(k))

    def _validate(self, k, value):
        if value >= self.strict_bound:
            raise MalformedRealError(
                f"value {render_rational(value)} at index {k} reaches the bound "
                f"{render_rational(self.strict_bound)}", index=k)
        if k and value <= self._memo[k - 1]:
            raise MalformedRealError(f"sequence does not increase at index {k}", index=k)

    def sample(self, n):
        return self.at(n)

    def upper_at(self, n):
        if self.upper_rule is None:
            return None
        return self.upper_rule.at(n)

    def known_sup(self, fuel):
        """The exact supremum when a constructor certifies it by this fuel."""
        return self._sup(fuel) if self._sup is not None else None

    def upper_bound(self, fuel):
        """Smallest rational known to be >= every value; every candidate is a strict bound."""
        best = self.strict_bound
        if self.upper_rule is not None:
            best = min(best, self.upper_rule.at(fuel))
        if self._ceiling is not None:
            ceiling = self._ceiling(fuel)
            if ceiling is not None:
                best = min(best, ceiling)
        sup = self.known_sup(fuel)
        if sup is not None:
            best = min(best, sup)
        return best

    def lower_estimate(self, fuel):
        """Largest rational known to be <= the supremum."""
        sup = self.known_sup(fuel)
        return sup if sup is not None else self.at(fuel)

    def same_cut(self, other):
        return self is other or self.origin == other.origin

    def derived(self, key, factory):
        """Per-value cache for values built from this one (approximations)."""
        with self._derived_lock:
            if key not in self._derived:
                self._derived[key] = factory()
            return self._derived[key]

    def __repr__(self):
        if self.label:
            return self.label
        return f"OrientedReal(bound={render_rational(self.strict_bound)})"


def sample(alpha, n):
    return alpha.at(n)


def embed_rational(q):
    """q-hat: n -> q - 1/(n+1), bound q, upper rule constantly q."""
    q = as_rational(q)
    return OrientedReal(lambda n: q - Fraction(1, n + 1), q, lambda n: q,
                        origin=("hat", q), sup=q, tight_upper=True,
                        label=f"hat({render_rational(q)})")


def shift(alpha, r):
    """The translate n -> alpha(n) + r."""
    r = as_rational(r)
    if r == 0:
        return alpha
    upper = None
    if alpha.upper_rule is not None:
        upper = lambda n: alpha.upper_at(n) + r

    def sup(fuel):
        s = alpha.known_sup(fuel)
        return None if s is None else s + r

    return OrientedReal(lambda n: alpha.at(n) + r, alpha.strict_bound + r, upper,
                        origin=("shift", alpha.origin, r), sup=sup,
                        ceiling=lambda fuel: alpha.upper_bound(fuel) + r,
                        tight_upper=alpha.tight_upper)


def lt_rational(q, alpha, fuel):
    """q < alpha: some alpha(n) above q."""
    q = as_rational(q)
    n = alpha.first_index_above(q, fuel)
    if n is not None:
        return Trilean.confirmed(witness=n)
    if q >= alpha.upper_bound(fuel):
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def le_rational(alpha, q, fuel):
    """alpha <= q-hat: every alpha(n) below q."""
    q = as_rational(q)
    if alpha.upper_bound(fuel) <= q:
        return Trilean.confirmed()
    m = alpha.first_index_at_least(q, fuel)
    if m is not None:
        return Trilean.refuted(witness=m)
    sup = alpha.known_sup(fuel)
    if sup is not None and sup > q:
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def below_rational(alpha, q, fuel):
    """alpha < q-hat, i.e. the supremum lies strictly below q."""
    q = as_rational(q)
    if alpha.upper_bound(fuel) < q:
        return Trilean.confirmed()
    m = alpha.first_index_at_least(q, fuel)
    if m is not None:
        return Trilean.refuted(witness=m)
    sup = alpha.known_sup(fuel)
    if sup is not None and sup >= q:
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def rational_le(q, alpha, fuel):
    """q-hat <= alpha, i.e. every p < q lies in the cut."""
    q = as_rational(q)
    n = alpha.first_index_at_least(q, fuel)
    if n is not None:
        return Trilean.confirmed(witness=n)
    sup = alpha.known_sup(fuel)
    if sup is not None and sup >= q:
        return Trilean.confirmed()
    if alpha.upper_bound(fuel) < q:
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def lt(alpha, beta, fuel):
    """alpha < beta: some beta(n) bounds all of alpha."""
    bound_alpha = alpha.upper_bound(fuel)
    n = beta.first_index_at_least(bound_alpha, fuel)
    if n is not None:
        return Trilean.confirmed(witness=n)
    bound_beta = beta.upper_bound(fuel)
    m = alpha.first_index_at_least(bound_beta, fuel)
    if m is not None:
        return Trilean.refuted(witness=m)
    sup = alpha.known_sup(fuel)
    if sup is not None and sup >= bound_beta:
        return Trilean.refuted()
    logger.debug("lt undecided after %d samples", fuel + 1)
    return Trilean.unknown(fuel)


def le(alpha, beta, fuel):
    """alpha <= beta: the cut of alpha is contained in the cut of beta."""
    if alpha.same_cut(beta):
        return Trilean.confirmed(note="origin")
    strict = lt(alpha, beta, fuel)
    if strict.is_confirmed:
        return strict
    sup_beta = beta.known_sup(fuel)
    if sup_beta is not None and sup_beta >= alpha.upper_bound(fuel):
        return Trilean.confirmed()
    bound_beta = beta.upper_bound(fuel)
    m = alpha.first_index_at_least(bound_beta, fuel)
    if m is not None:
        return Trilean.refuted(witness=m)
    sup_alpha = alpha.known_sup(fuel)
    if sup_alpha is not None and sup_alpha > bound_beta:
        return Trilean.refuted()
    return Trilean.unknown(fuel)


def eq_o(alpha, beta, fuel):
    """Cut equality; only construction certificates confirm it outright."""
    if alpha.same_cut(beta):
        return Trilean.confirmed(note="origin")
    return le(alpha, beta, fuel) & le(beta, alpha, fuel)


def _both_sups(alpha, beta, combine):
    def sup(fuel):
        a, b = alpha.known_sup(fuel), beta.known_sup(fuel)
        if a is None or b is None:
            return None
        return combine(a, b)
    return sup


def commutative_origin(tag, alpha, beta):
    return (tag, frozenset((alpha.origin, beta.origin)))


def cut_intersection(alpha, beta):
    """gamma(n) = min(alpha(n), beta(n)); its cut is the intersection of both."""
    upper = None
    if alpha.upper_rule is not None or beta.upper_rule is not None:
        def upper(n):
            ua = alpha.upper_at(n) if alpha.upper_rule is not None else alpha.strict_bound
            ub = beta.upper_at(n) if beta.upper_rule is not None else beta.strict_bound
            return min(ua, ub)
    if alpha.origin == beta.origin:
        origin = alpha.origin
    else:
        origin = commutative_origin("meet", alpha, beta)
    return OrientedReal(lambda n: min(alpha.at(n), beta.at(n)),
                        min(alpha.strict_bound, beta.strict_bound), upper,
                        origin=origin, sup=_both_sups(alpha, beta, min),
                        ceiling=lambda fuel: min(alpha.upper_bound(fuel), beta.upper_bound(fuel)),
                        tight_upper=(alpha.tight_upper and beta.tight_upper))


def cut_from_bounded_sequence(gamma, bound, origin_tag="bseq", sup=None):
    """n -> max(gamma(0..n)) - 1/(n+1) for a rule gamma strictly below bound."""
    bound = as_rational(bound)

    def checked(k):
        value = Fraction(gamma(k))
        if value >= bound:
            raise MalformedRealError(
                f"bounded sequence reaches {render_rational(value)} at index {k}, "
                f"bound is {render_rational(bound)}", index=k)
        return value

    peaks = Recurrence(lambda k, prev: checked(k) if prev is None else max(prev, checked(k)))
    return OrientedReal(lambda n: peaks.at(n) - Fraction(1, n + 1), bound,
                        origin=(origin_tag, gamma, bound), sup=sup)
