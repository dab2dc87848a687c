#!/usr/bin/env python3
"""
Smoke tests for the orientedcut facade.

Run with: python tests.py
"""

import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import orientedcut
from orientedcut import Orc, Settings
from orientedcut.continuity import IDENTITY, ThresholdMap
from orientedcut.corpus import builtin_pairs
from orientedcut.errors import EvalError, PreconditionError, UnsupportedOperationError


class TestOrc(unittest.TestCase):
    """Test cases for the Orc facade."""

    def setUp(self):
        """Set up a facade with a small fuel and a scratch directory."""
        self.test_dir = tempfile.mkdtemp()
        self.orc = Orc(Settings(fuel=256))

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def test_order(self):
        zero, one = self.orc.embed(0), self.orc.embed(1)
        self.assertTrue(self.orc.lt(zero, one).is_confirmed)
        self.assertTrue(self.orc.le(zero, one).is_confirmed)
        self.assertTrue(self.orc.eq(zero, one).is_refuted)
        self.assertTrue(self.orc.member(Fraction(1, 2), one).is_confirmed)
        self.assertEqual(self.orc.psi(0, one).note, "MP")

    def test_arithmetic(self):
        one = self.orc.embed(1)
        self.assertEqual(self.orc.add(one, one).at(3), Fraction(3, 2))
        self.assertEqual(self.orc.neg(one).known_sup(8), -1)
        with self.assertRaises(PreconditionError):
            self.orc.mul(self.orc.embed(Fraction(1, 2)), one)
        self.assertFalse(self.orc.check_add(one, one, self.orc.embed(2)).is_refuted)
        self.assertTrue(self.orc.check_add(one, one, self.orc.embed(3)).is_refuted)

    def test_approximation(self):
        zeta = self.orc.approximate(self.orc.embed(1), 1)
        self.assertEqual(zeta.prefix(3), [0, Fraction(1, 2), Fraction(1, 2)])
        probe = self.orc.stabilize(self.orc.phi([Fraction(1, 4), Fraction(1, 2)], self.orc.embed(Fraction(3, 5))))
        self.assertEqual(probe.limit, 2)
        limit = self.orc.limit([self.orc.embed(Fraction(1, 4)), self.orc.embed(Fraction(1, 2))], 1)
        self.assertEqual(limit.known_sup(256), Fraction(1, 2))

    def test_metric_and_topology(self):
        zero, eighth = self.orc.embed(0), self.orc.embed(Fraction(1, 8))
        verdict, witness = self.orc.d(zero, eighth, Fraction(1, 4))
        self.assertTrue(verdict.is_confirmed)
        self.assertEqual(witness.p, Fraction(1, 8))
        reference = [self.orc.embed(Fraction(1, 4)), self.orc.embed(Fraction(1, 2))]
        self.assertEqual(str(self.orc.signature(self.orc.embed(Fraction(3, 8)), reference)), "CR")
        self.assertTrue(self.orc.interval(self.orc.embed(Fraction(3, 8)), Fraction(1, 4), Fraction(1, 2))
                        .is_confirmed)

    def test_continuity(self):
        descriptor = ThresholdMap((Fraction(1, 4), Fraction(1, 2)))
        self.assertEqual([repr(x) for x in self.orc.ocp(descriptor)], ["hat(1/4)", "hat(1/2)"])
        pairs = builtin_pairs(size=8)
        self.assertEqual(self.orc.totalc(descriptor, 0, pairs).failed, 0)
        self.assertEqual(self.orc.totalc(IDENTITY, 2, pairs).failed, 0)

    def test_scan(self):
        scanning = Orc(Settings(fuel=64, grid=3))
        descriptor = ThresholdMap((Fraction(1, 4), Fraction(1, 2)))
        self.assertEqual([repr(x) for x in scanning.scan(descriptor)], ["hat(1/4)", "hat(1/2)"])
        coarse = Orc(Settings(fuel=64, grid=2))
        self.assertEqual([repr(x) for x in coarse.scan(ThresholdMap((Fraction(1, 3),)))], ["hat(1/4)"])
        with self.assertRaises(UnsupportedOperationError):
            scanning.scan(IDENTITY)

    def test_expressions(self):
        self.assertEqual(self.orc.let("x", "hat( 2/4 )"), "hat(1/2)")
        self.assertEqual(self.orc.evaluate("add(x,x)").at(0), -1)
        with self.assertRaises(EvalError):
            self.orc.evaluate("neg(y)")
        self.orc.set_raise_exception(False)
        self.assertIsNone(self.orc.evaluate("neg(y)"))

    def test_records(self):
        path = os.path.join(self.test_dir, "half.rec")
        self.orc.dump(self.orc.embed(Fraction(1, 2)), path, length=4)
        record = self.orc.read(path)
        self.assertEqual(record.values, [Fraction(-1, 2), 0, Fraction(1, 6), Fraction(1, 4)])

    def test_module_functions(self):
        one = orientedcut.embed(1)
        self.assertTrue(orientedcut.lt(orientedcut.embed(0), one).is_confirmed)
        self.assertEqual(orientedcut.__version__, "0.1.0")


if __name__ == "__main__":
    unittest.main()
