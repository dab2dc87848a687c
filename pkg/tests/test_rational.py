"""Tests for exact rationals, value sets and memoized sequences."""

import threading
from fractions import Fraction

import pytest

from orientedcut.errors import ConstructionError
from orientedcut.rational import (RationalProgression, UnionValues, as_rational, dyadic, grid_floor, midpoint,
                                  parse_rational, rat_normalize, render_rational, top_value)
from orientedcut.sequences import CyclicRule, LazySequence, Recurrence


class TestRatNormalize:
    """Tests for rat_normalize()."""

    def test_reduces(self):
        assert rat_normalize(6, -4) == Fraction(-3, 2)

    def test_zero_denominator(self):
        with pytest.raises(ConstructionError, match="zero denominator"):
            rat_normalize(1, 0)

    def test_construction_error_is_value_error(self):
        with pytest.raises(ValueError):
            rat_normalize(3, 0)


class TestParseRender:
    """Tests for parse_rational() and render_rational()."""

    def test_parse_forms(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-2") == Fraction(-2)
        assert parse_rational(" 10 / 4 ") == Fraction(5, 2)

    def test_parse_rejects_decimals(self):
        with pytest.raises(ConstructionError, match="malformed"):
            parse_rational("0.5")

    def test_parse_zero_denominator(self):
        with pytest.raises(ConstructionError):
            parse_rational("1/0")

    def test_render_keeps_denominator(self):
        assert render_rational(Fraction(2)) == "2/1"
        assert render_rational(Fraction(-1, 3)) == "-1/3"

    def test_as_rational(self):
        assert as_rational(3) == Fraction(3)
        assert as_rational("1/2") == Fraction(1, 2)
        with pytest.raises(TypeError):
            as_rational(0.5)
        with pytest.raises(TypeError):
            as_rational(True)


class TestGrid:
    """Tests for grid_floor(), dyadic() and midpoint()."""

    def test_grid_floor(self):
        assert grid_floor(Fraction(3, 8), Fraction(1, 4)) == 1
        assert grid_floor(Fraction(-1, 8), Fraction(1, 4)) == -1
        assert grid_floor(Fraction(1, 2), Fraction(1, 4)) == 2

    def test_grid_floor_step(self):
        with pytest.raises(ConstructionError):
            grid_floor(1, 0)

    def test_dyadic(self):
        assert dyadic(0) == 1
        assert dyadic(3) == Fraction(1, 8)

    def test_midpoint(self):
        assert midpoint(Fraction(1, 4), Fraction(1, 2)) == Fraction(3, 8)


class TestRationalProgression:
    """Tests for RationalProgression."""

    def test_below(self):
        values = RationalProgression.below(Fraction(-1), Fraction(1, 2), Fraction(1))
        assert list(values) == [-1, Fraction(-1, 2), 0, Fraction(1, 2)]
        assert values.maximum == Fraction(1, 2)
        assert top_value(values) == Fraction(1, 2)

    def test_contains(self):
        values = RationalProgression(0, Fraction(1, 4), 5)
        assert Fraction(3, 4) in values
        assert Fraction(1, 3) not in values
        assert Fraction(5, 4) not in values
        assert "x" not in values

    def test_contains_rejects_inexact_values(self):
        values = RationalProgression(0, Fraction(1, 4), 5)
        assert 0.25 not in values
        assert "1/4" not in values
        assert "0.25" not in values
        assert True not in values
        assert None not in values
        assert 1 in values

    def test_indexing(self):
        values = RationalProgression(1, 1, 3)
        assert values[-1] == 3
        assert values[0:2] == [1, 2]
        with pytest.raises(IndexError):
            values[3]

    def test_invalid(self):
        with pytest.raises(ConstructionError):
            RationalProgression(0, 0, 2)
        with pytest.raises(ConstructionError):
            RationalProgression(0, 1, 0)
        with pytest.raises(ConstructionError):
            RationalProgression.below(1, 1, 1)

    def test_equality(self):
        assert RationalProgression(0, 1, 2) == RationalProgression(0, 1, 2)
        assert hash(RationalProgression(0, 1, 2)) == hash(RationalProgression(0, 1, 2))


class TestUnionValues:
    """Tests for UnionValues."""

    def test_merge(self):
        union = UnionValues([Fraction(0), Fraction(1)], RationalProgression(0, Fraction(1, 2), 3))
        assert list(union) == [0, Fraction(1, 2), 1]
        assert union.maximum == 1
        assert union[-1] == 1
        assert Fraction(1, 2) in union
        assert Fraction(1, 3) not in union


class TestLazySequence:
    """Tests for LazySequence, Recurrence and CyclicRule."""

    def test_memoizes_in_order(self):
        calls = []

        def rule(n):
            calls.append(n)
            return n * n

        seq = LazySequence(rule)
        assert seq.at(3) == 9
        assert seq(2) == 4
        assert calls == [0, 1, 2, 3]
        assert seq.evaluated == 4

    def test_negative_index(self):
        with pytest.raises(IndexError):
            LazySequence(lambda n: n).at(-1)

    def test_prefix(self):
        seq = LazySequence(lambda n: n + 1)
        assert seq.prefix(3) == [1, 2, 3]
        assert seq.prefix(0) == []

    def test_searches(self):
        seq = LazySequence(lambda n: Fraction(n, 2))
        assert seq.first_index_above(Fraction(1), 10) == 3
        assert seq.first_index_at_least(Fraction(1), 10) == 2
        assert seq.first_index_above(Fraction(100), 10) is None

    def test_concurrent_first_evaluation(self):
        calls = []
        seq = LazySequence(lambda n: calls.append(n) or n)
        threads = [threading.Thread(target=seq.at, args=(50,)) for _ in range(8)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        assert calls == list(range(51))

    def test_recurrence(self):
        seq = Recurrence(lambda k, prev: 1 if prev is None else prev * 2)
        assert seq.prefix(4) == [1, 2, 4, 8]

    def test_cyclic_rule(self):
        rule = CyclicRule((Fraction(0), Fraction(1)))
        assert [rule(n) for n in range(4)] == [0, 1, 0, 1]
        assert rule == CyclicRule([Fraction(0), Fraction(1)])
        assert hash(rule) == hash(CyclicRule((Fraction(0), Fraction(1))))
        with pytest.raises(ValueError):
            CyclicRule(())
