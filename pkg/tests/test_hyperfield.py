"""Tests for the image map, arithmetic constructors and relation checks."""

from fractions import Fraction

import pytest

from orientedcut.approximation import sup_of_values
from orientedcut.errors import ConstructionError, PreconditionError, UnsupportedOperationError
from orientedcut.hyperfield import (GridProbe, add, check_add, check_mul, mul_positive, neg_twosided,
                                    probe_agreement, psi_member, psi_separator)
from orientedcut.oriented import cut_from_bounded_sequence, embed_rational, lt, lt_rational

ONE = embed_rational(1)
ZERO = embed_rational(0)


def hat(p, q=1):
    return embed_rational(Fraction(p, q))


class TestGridProbe:
    """Tests for GridProbe."""

    def test_points(self):
        probe = GridProbe(0, 1, Fraction(1, 4))
        assert probe.points() == [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1]

    @pytest.mark.parametrize("lo,hi,step", [(1, 1, Fraction(1, 4)), (0, 1, 0), (0, 1, 1)])
    def test_degenerate(self, lo, hi, step):
        with pytest.raises(ConstructionError):
            GridProbe(lo, hi, step)


class TestPsiMember:
    """Tests for psi_member()."""

    def test_confirmed(self):
        verdict = psi_member(0, ONE, 8)
        assert verdict.is_confirmed
        assert verdict.note == "MP"
        assert 0 < verdict.witness < 1

    def test_refuted_by_bound(self):
        assert psi_member(1, ONE, 8).is_refuted

    def test_unknown_near_bound(self):
        assert psi_member(1 - Fraction(1, 1000), ONE, 8).is_unknown


class TestPsiSeparator:
    """Tests for psi_separator()."""

    def test_order_preserved(self):
        alpha, beta = hat(1, 4), hat(1, 2)
        assert lt(alpha, beta, 64).is_confirmed
        assert psi_separator(alpha, beta, GridProbe(0, 1, Fraction(1, 128)), 256) == Fraction(1, 4)

    def test_no_separator_for_equal_values(self):
        assert psi_separator(ONE, ONE, GridProbe(0, 1, Fraction(1, 8)), 64) is None


class TestAdd:
    """Tests for add()."""

    def test_sample(self):
        assert add(ONE, ONE).at(3) == Fraction(3, 2)

    def test_certified_sum(self):
        total = add(hat(1, 2), hat(1, 4))
        assert total.known_sup(4) == Fraction(3, 4)
        assert total.strict_bound == Fraction(3, 4)

    def test_commutative_origin(self):
        assert add(ONE, hat(1, 2)).same_cut(add(hat(1, 2), ONE))


class TestMulPositive:
    """Tests for mul_positive()."""

    def test_product(self):
        product = mul_positive(hat(2), hat(3))
        assert product.at(0) == 2
        assert product.known_sup(0) == 6

    def test_negative_start_rejected(self):
        with pytest.raises(PreconditionError) as info:
            mul_positive(hat(1, 2), ONE)
        assert info.value.index == 0

    def test_boundary_start_allowed(self):
        product = mul_positive(ONE, ONE)
        assert product.at(0) == 0
        assert product.known_sup(4) == 1


class TestNegTwosided:
    """Tests for neg_twosided()."""

    def test_negation_of_one(self):
        minus = neg_twosided(ONE)
        assert minus.at(0) == -2
        assert minus.known_sup(8) == -1
        assert lt_rational(Fraction(-3, 2), minus, 8).is_confirmed
        assert lt_rational(-1, minus, 8).is_refuted

    def test_needs_upper_rule(self):
        with pytest.raises(UnsupportedOperationError):
            neg_twosided(cut_from_bounded_sequence(lambda n: 0, 1))

    def test_matches_negated_embedding(self):
        probe = GridProbe(-2, 2, Fraction(1, 8))
        for q in (Fraction(1, 3), Fraction(-3, 4), Fraction(2)):
            assert not probe_agreement(neg_twosided(embed_rational(q)), embed_rational(-q), probe, 64).is_refuted

    def test_involution(self):
        twice = neg_twosided(neg_twosided(ONE))
        assert twice.known_sup(8) == 1
        assert not probe_agreement(twice, ONE, GridProbe(-1, 2, Fraction(1, 8)), 64).is_refuted


class TestCheckAdd:
    """Tests for check_add()."""

    def test_true_triple_not_refuted(self):
        verdict = check_add(ONE, ONE, hat(2), GridProbe(-1, 3, Fraction(1, 4)), 32)
        assert verdict.is_unknown
        assert "cells agree" in verdict.note

    def test_wrong_triple_refuted(self):
        verdict = check_add(ONE, ONE, hat(3), GridProbe(1, 3, Fraction(1, 4)), 32)
        assert verdict.is_refuted

    def test_identity(self):
        alpha = hat(3, 8)
        assert not check_add(alpha, ZERO, alpha, GridProbe(-1, 1, Fraction(1, 16)), 64).is_refuted

    def test_inverse(self):
        verdict = check_add(ONE, neg_twosided(ONE), ZERO, GridProbe(-1, 1, Fraction(1, 8)), 64)
        assert not verdict.is_refuted

    def test_parallel_matches_sequential(self):
        probe = GridProbe(-1, 3, Fraction(1, 16))
        sequential = check_add(ONE, hat(1, 2), hat(3, 2), probe, 64)
        parallel = check_add(ONE, hat(1, 2), hat(3, 2), probe, 64, workers=4)
        assert sequential == parallel
        assert sequential.note == parallel.note

    def test_needs_grid_probe(self):
        with pytest.raises(ConstructionError):
            check_add(ONE, ONE, hat(2), [0, 1], 8)


class TestCheckMul:
    """Tests for check_mul()."""

    def test_true_triple(self):
        assert not check_mul(hat(2), hat(3), hat(6), GridProbe(0, 8, Fraction(1, 2)), 64).is_refuted

    def test_wrong_triple(self):
        assert check_mul(hat(2), hat(3), hat(8), GridProbe(0, 8, Fraction(1, 2)), 64).is_refuted


class TestProbeAgreement:
    """Tests for probe_agreement()."""

    def test_equal_cuts_never_refuted(self):
        probe = GridProbe(0, 1, Fraction(1, 16))
        assert probe_agreement(hat(1, 2), sup_of_values([Fraction(1, 2)], 1), probe, 64).is_unknown

    def test_different_cuts(self):
        probe = GridProbe(0, 1, Fraction(1, 16))
        assert probe_agreement(hat(1, 2), hat(3, 4), probe, 64).is_refuted
