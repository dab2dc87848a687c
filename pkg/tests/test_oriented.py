"""Tests for oriented reals, their constructors and the order checks."""

from fractions import Fraction

import pytest

from orientedcut.errors import MalformedRealError
from orientedcut.oriented import (OrientedReal, below_rational, cut_from_bounded_sequence, cut_intersection,
                                  embed_rational, eq_o, le, le_rational, lt, lt_rational, rational_le, sample,
                                  shift)
from orientedcut.sequences import CyclicRule

ONE = embed_rational(1)
ZERO = embed_rational(0)


def harmonic(n):
    return 1 - Fraction(1, n + 2)


class TestOrientedReal:
    """Tests for OrientedReal validation and accessors."""

    def test_values_must_stay_below_bound(self):
        alpha = OrientedReal(lambda n: Fraction(n), 3)
        assert alpha.at(2) == 2
        with pytest.raises(MalformedRealError) as info:
            alpha.at(3)
        assert info.value.index == 3

    def test_values_must_increase(self):
        alpha = OrientedReal(CyclicRule((Fraction(0), Fraction(1, 2))), 1)
        with pytest.raises(MalformedRealError, match="does not increase"):
            alpha.at(2)

    def test_upper_rule_validated(self):
        alpha = OrientedReal(lambda n: -Fraction(1, n + 1), 1, lambda n: Fraction(-1))
        with pytest.raises(MalformedRealError):
            alpha.upper_at(0)

    def test_upper_bound_prefers_tightest(self):
        alpha = OrientedReal(lambda n: -Fraction(1, n + 1), 5, lambda n: Fraction(1, n + 1))
        assert alpha.upper_bound(3) == Fraction(1, 4)
        assert alpha.known_sup(3) is None

    def test_same_cut_by_origin(self):
        assert embed_rational(Fraction(1, 2)).same_cut(embed_rational(Fraction(2, 4)))
        assert not ONE.same_cut(ZERO)


class TestEmbedRational:
    """Tests for embed_rational() and sample()."""

    def test_terms(self):
        assert sample(ONE, 0) == 0
        assert sample(ONE, 3) == Fraction(3, 4)
        assert sample(ZERO, 0) == -1

    def test_half(self):
        half = embed_rational(Fraction(1, 2))
        assert half.prefix(4) == [Fraction(-1, 2), 0, Fraction(1, 6), Fraction(1, 4)]
        assert half.strict_bound == Fraction(1, 2)
        assert repr(half) == "hat(1/2)"

    def test_certified_sup(self):
        assert ONE.known_sup(0) == 1
        assert ONE.tight_upper


class TestShift:
    """Tests for shift()."""

    def test_translate(self):
        moved = shift(embed_rational(Fraction(1, 2)), Fraction(1, 4))
        assert moved.at(0) == Fraction(-1, 4)
        assert moved.known_sup(8) == Fraction(3, 4)
        assert moved.strict_bound == Fraction(3, 4)

    def test_zero_offset_is_identity(self):
        assert shift(ONE, 0) is ONE


class TestLtRational:
    """Tests for lt_rational()."""

    def test_confirmed_with_witness(self):
        verdict = lt_rational(Fraction(1, 2), ONE, 4)
        assert verdict.is_confirmed
        assert verdict.witness == 2

    def test_refuted_by_bound(self):
        assert lt_rational(2, ONE, 4).is_refuted

    def test_unknown_beyond_fuel(self):
        assert lt_rational(1 - Fraction(1, 10 ** 9), ONE, 10).is_unknown


class TestLeRational:
    """Tests for le_rational()."""

    def test_confirmed_by_bound(self):
        assert le_rational(ONE, 1, 0).is_confirmed

    def test_refuted_by_sample(self):
        assert le_rational(ONE, Fraction(1, 2), 3).is_refuted

    def test_unknown_without_upper_rule(self):
        alpha = cut_from_bounded_sequence(harmonic, 2)
        for fuel in (1, 16, 256):
            assert le_rational(alpha, Fraction(3, 2), fuel).is_unknown


class TestRationalComparisons:
    """Tests for below_rational() and rational_le()."""

    def test_below(self):
        assert below_rational(embed_rational(Fraction(1, 2)), Fraction(3, 4), 4).is_confirmed
        assert below_rational(ONE, 1, 4).is_refuted

    def test_rational_le(self):
        assert rational_le(Fraction(1, 2), embed_rational(Fraction(1, 2)), 4).is_confirmed
        assert rational_le(Fraction(1, 2), ONE, 4).is_confirmed
        assert rational_le(2, ONE, 4).is_refuted


class TestLt:
    """Tests for lt()."""

    def test_confirmed(self):
        assert lt(ZERO, ONE, 1).is_confirmed

    def test_refuted(self):
        assert lt(ONE, ZERO, 1).is_refuted

    def test_irreflexive(self):
        for alpha in (ONE, cut_from_bounded_sequence(harmonic, 1)):
            assert not lt(alpha, alpha, 64).is_confirmed


class TestLe:
    """Tests for le()."""

    def test_via_lt(self):
        assert le(ZERO, ONE, 1).is_confirmed

    def test_refuted(self):
        assert le(ONE, embed_rational(Fraction(1, 2)), 2).is_refuted

    def test_reflexive(self):
        alpha = cut_from_bounded_sequence(harmonic, 1)
        assert le(alpha, alpha, 0).is_confirmed


class TestEqO:
    """Tests for eq_o()."""

    def test_identity(self):
        assert eq_o(ONE, ONE, 0).is_confirmed

    def test_refuted(self):
        assert eq_o(ONE, embed_rational(2), 4).is_refuted

    def test_unknown_without_certificate(self):
        alpha = cut_from_bounded_sequence(harmonic, 1)
        for fuel in (4, 64, 512):
            assert eq_o(ONE, alpha, fuel).is_unknown


class TestCutIntersection:
    """Tests for cut_intersection()."""

    def test_min_with_larger(self):
        gamma = cut_intersection(ONE, embed_rational(2))
        assert gamma.prefix(10) == ONE.prefix(10)

    def test_membership(self):
        gamma = cut_intersection(ONE, embed_rational(Fraction(3, 4)))
        assert lt_rational(Fraction(1, 2), gamma, 8).is_confirmed
        assert lt_rational(Fraction(4, 5), gamma, 8).is_refuted

    def test_commutative_origin(self):
        a, b = embed_rational(Fraction(1, 3)), embed_rational(Fraction(2, 3))
        assert cut_intersection(a, b).same_cut(cut_intersection(b, a))
        assert cut_intersection(a, a).same_cut(a)


class TestCutFromBoundedSequence:
    """Tests for cut_from_bounded_sequence()."""

    def test_constant_zero(self):
        alpha = cut_from_bounded_sequence(lambda n: 0, 1)
        assert alpha.prefix(3) == ZERO.prefix(3)

    def test_running_maximum(self):
        alpha = cut_from_bounded_sequence(CyclicRule((Fraction(0), Fraction(1))), 2)
        assert alpha.prefix(3) == [-1, Fraction(1, 2), Fraction(2, 3)]

    def test_harmonic_agrees_with_one(self):
        alpha = cut_from_bounded_sequence(harmonic, 1)
        for q in (Fraction(0), Fraction(1, 2), Fraction(7, 8)):
            assert lt_rational(q, alpha, 64).is_confirmed
        assert lt_rational(1, alpha, 64).is_refuted

    def test_bound_violation_is_lazy(self):
        alpha = cut_from_bounded_sequence(lambda n: Fraction(n), 2)
        assert alpha.at(1) == Fraction(1, 2)
        with pytest.raises(MalformedRealError) as info:
            alpha.at(2)
        assert info.value.index == 2
