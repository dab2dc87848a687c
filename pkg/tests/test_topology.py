"""Tests for the semi-metric, witnesses and the two topologies."""

from fractions import Fraction

import pytest

from orientedcut.almost import constant_almost_rational
from orientedcut.errors import ConstructionError
from orientedcut.oriented import cut_from_bounded_sequence, embed_rational
from orientedcut.topology import (MetricWitness, Signature, ball_member, compose_witnesses, d_check,
                                  interval_open_member, lt_signature, open_interval_neighbourhood,
                                  oriented_nbhd_member, signatures_match, validate_witness)
from orientedcut.trilean import Trilean

FUEL = 256


def hat(p, q=1):
    return embed_rational(Fraction(p, q))


REFERENCE = [hat(1, 4), hat(1, 2), hat(3, 4)]


class TestDCheck:
    """Tests for d_check()."""

    def test_close_values(self):
        verdict, witness = d_check(hat(0), hat(1, 8), Fraction(1, 4), FUEL)
        assert verdict.is_confirmed
        assert witness.p == Fraction(1, 8)
        assert witness.zeta.at(FUEL) == 0

    def test_far_values(self):
        verdict, witness = d_check(hat(0), hat(1), Fraction(1, 2), FUEL)
        assert verdict.is_refuted
        assert witness is None
        assert verdict.note == "separator r=0/1"

    def test_reflexive(self):
        alpha = cut_from_bounded_sequence(lambda n: 1 - Fraction(1, n + 2), 1)
        for q in (Fraction(1), Fraction(1, 64)):
            verdict, witness = d_check(alpha, alpha, q, FUEL)
            assert verdict.is_confirmed
            assert witness.p == q

    def test_symmetric(self):
        pairs = [(hat(0), hat(1, 8)), (hat(0), hat(1)), (hat(1, 3), hat(1, 2))]
        for a, b in pairs:
            for q in (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)):
                assert d_check(a, b, q, FUEL)[0] == d_check(b, a, q, FUEL)[0]

    def test_monotone_in_q(self):
        a, b = hat(1, 3), hat(1, 2)
        assert d_check(a, b, Fraction(1, 4), FUEL)[0].is_confirmed
        assert d_check(a, b, Fraction(1, 2), FUEL)[0].is_confirmed

    def test_unknown_without_bounds(self):
        alpha = cut_from_bounded_sequence(lambda n: 0, 1)
        verdict, witness = d_check(alpha, hat(0), Fraction(1, 2), FUEL)
        assert verdict.is_unknown
        assert witness is None

    def test_positive_q(self):
        with pytest.raises(ConstructionError):
            d_check(hat(0), hat(0), 0, FUEL)


class TestBallMember:
    """Tests for ball_member()."""

    def test_inside(self):
        assert ball_member(hat(1, 8), hat(0), Fraction(1, 4), FUEL).is_confirmed

    def test_outside(self):
        assert ball_member(hat(1), hat(0), Fraction(1, 2), FUEL).is_refuted

    def test_center(self):
        assert ball_member(hat(1, 3), hat(1, 3), Fraction(1, 1024), FUEL).is_confirmed


class TestWitnesses:
    """Tests for MetricWitness, validate_witness() and compose_witnesses()."""

    def test_validate(self):
        a, b = hat(0), hat(1, 8)
        _, witness = d_check(a, b, Fraction(1, 4), FUEL)
        assert validate_witness(a, b, witness, FUEL).is_confirmed
        assert "p=1/8" in witness.describe()

    def test_validate_rejects_escape(self):
        a, b = hat(0), hat(1)
        witness = MetricWitness(constant_almost_rational(0, lower_of=(a,)), Fraction(1, 4), FUEL)
        assert validate_witness(a, b, witness, FUEL).is_refuted

    def test_triangle(self):
        a, b, c = hat(0), hat(1, 8), hat(1, 4)
        q1 = q2 = Fraction(1, 4)
        _, first = d_check(a, b, q1, FUEL)
        _, second = d_check(b, c, q2, FUEL)
        composed = compose_witnesses(first, second)
        assert composed.p == first.p + second.p
        assert composed.p <= q1 + q2
        assert validate_witness(a, c, composed, FUEL).is_confirmed
        assert d_check(a, c, q1 + q2, FUEL)[0].is_confirmed

    def test_compose_needs_shared_value(self):
        _, first = d_check(hat(0), hat(1, 8), Fraction(1, 4), FUEL)
        _, second = d_check(hat(1, 2), hat(5, 8), Fraction(1, 4), FUEL)
        with pytest.raises(ConstructionError):
            compose_witnesses(first, second)

    def test_positive_p(self):
        with pytest.raises(ConstructionError):
            MetricWitness(constant_almost_rational(0), Fraction(0), 0)


class TestLtSignature:
    """Tests for lt_signature()."""

    def test_inside_cell(self):
        signature = lt_signature(hat(3, 8), REFERENCE, FUEL)
        assert str(signature) == "CRR"
        assert signature.decided

    def test_on_reference_point(self):
        assert str(lt_signature(hat(1, 4), REFERENCE, FUEL)) == "RRR"

    def test_empty_reference(self):
        signature = lt_signature(hat(1, 2), [], FUEL)
        assert len(signature) == 0
        assert signature.decided

    def test_parallel(self):
        assert str(lt_signature(hat(5, 8), REFERENCE, FUEL, workers=3)) == "CCR"


class TestOrientedNbhdMember:
    """Tests for oriented_nbhd_member() and signatures_match()."""

    def test_same_cell(self):
        reference = [hat(1, 4), hat(1, 2)]
        assert oriented_nbhd_member(hat(5, 16), hat(3, 8), reference, FUEL).is_confirmed

    def test_different_cell(self):
        reference = [hat(1, 4), hat(1, 2)]
        assert oriented_nbhd_member(hat(5, 8), hat(3, 8), reference, FUEL).is_refuted

    def test_self(self):
        assert oriented_nbhd_member(hat(3, 8), hat(3, 8), REFERENCE, FUEL).is_confirmed

    def test_undecided_entry(self):
        left = Signature((Trilean.confirmed(), Trilean.unknown()))
        right = Signature((Trilean.confirmed(), Trilean.refuted()))
        assert signatures_match(left, right).is_unknown

    def test_length_mismatch(self):
        with pytest.raises(ConstructionError):
            signatures_match(Signature(()), Signature((Trilean.confirmed(),)))

    def test_finite_intersection(self):
        first, second = [hat(1, 4)], [hat(1, 2)]
        center, point = hat(3, 8), hat(5, 16)
        both = oriented_nbhd_member(point, center, first + second, FUEL)
        separately = (oriented_nbhd_member(point, center, first, FUEL)
                      & oriented_nbhd_member(point, center, second, FUEL))
        assert both == separately == Trilean.confirmed()


class TestIntervals:
    """Tests for interval_open_member() and open_interval_neighbourhood()."""

    def test_inside(self):
        assert interval_open_member(hat(3, 8), Fraction(1, 4), Fraction(1, 2), FUEL).is_confirmed

    def test_above(self):
        assert interval_open_member(hat(5, 8), Fraction(1, 4), Fraction(1, 2), FUEL).is_refuted

    def test_left_end_excluded(self):
        assert interval_open_member(hat(1, 4), Fraction(1, 4), Fraction(1, 2), FUEL).is_refuted

    def test_right_end_included(self):
        assert interval_open_member(hat(1, 2), Fraction(1, 4), Fraction(1, 2), FUEL).is_confirmed

    def test_empty_interval(self):
        with pytest.raises(ConstructionError):
            interval_open_member(hat(1, 2), Fraction(1, 2), Fraction(1, 4), FUEL)

    def test_neighbourhood_stays_inside(self):
        a, b = Fraction(1, 4), Fraction(1, 2)
        reference = open_interval_neighbourhood(a, b)
        center = hat(3, 8)
        for point in (hat(5, 16), hat(7, 16), hat(1, 2)):
            if oriented_nbhd_member(point, center, reference, FUEL).is_confirmed:
                assert interval_open_member(point, a, b, FUEL).is_confirmed
