"""
Orc - Main class that combines all functionality

This module provides the Orc class that puts the constructors, order
checks, approximations, relations, metric, topologies and the continuity
harness behind one object whose settings supply the default fuel, grid
and worker count.
"""
from . import almost, approximation, continuity, corpus, hyperfield, oriented, records, topology
from .core import OrcCommand
from .expression import Evaluator, parse, render


class Orc(OrcCommand):
    """
    A class that combines all orientedcut functionality.
    """
    def __init__(self, settings=None):
        """Initialize the Orc object."""
        super().__init__(settings)
        self.env = {}
        self.evaluator = Evaluator(self.env, self.settings)

    # Constructors
    def embed(self, q):
        """The embedding of a rational."""
        return oriented.embed_rational(q)

    def bseq(self, gamma, bound):
        """Cut of a bounded rational sequence."""
        return oriented.cut_from_bounded_sequence(gamma, bound)

    def sup(self, values, bound):
        """Supremum of a finite list."""
        return approximation.sup_of_values(values, bound)

    def inf(self, values):
        """Infimum of a finite list."""
        return approximation.inf_finite(values)

    def shift(self, alpha, r):
        """Translate by a rational."""
        return oriented.shift(alpha, r)

    def meet(self, alpha, beta):
        """Intersection of two cuts."""
        return oriented.cut_intersection(alpha, beta)

    def add(self, alpha, beta):
        return hyperfield.add(alpha, beta)

    def mul(self, alpha, beta):
        return hyperfield.mul_positive(alpha, beta)

    def neg(self, alpha):
        return hyperfield.neg_twosided(alpha)

    def limit(self, items, bound, fuel=None):
        """Limit of a nondecreasing bounded sequence of oriented reals."""
        return approximation.monotone_limit(items, bound, self.fuel_or_default(fuel),
                                            span=self.settings.limit_span)

    # Order
    def lt(self, alpha, beta, fuel=None):
        return oriented.lt(alpha, beta, self.fuel_or_default(fuel))

    def le(self, alpha, beta, fuel=None):
        return oriented.le(alpha, beta, self.fuel_or_default(fuel))

    def eq(self, alpha, beta, fuel=None):
        return oriented.eq_o(alpha, beta, self.fuel_or_default(fuel))

    def member(self, q, alpha, fuel=None):
        """q lies in the cut of alpha."""
        return oriented.lt_rational(q, alpha, self.fuel_or_default(fuel))

    def psi(self, r, alpha, fuel=None):
        """r lies in the image of alpha."""
        return hyperfield.psi_member(r, alpha, self.fuel_or_default(fuel))

    # Almost numbers
    def approximate(self, beta, n):
        return approximation.approximate(beta, n)

    def phi(self, thresholds, beta):
        return almost.threshold_phi(thresholds, beta)

    def stabilize(self, xi, fuel=None):
        return almost.stabilization_probe(xi, self.fuel_or_default(fuel))

    # Relations
    def probe(self, lo=-2, hi=2):
        """Grid probe at the configured step."""
        return hyperfield.GridProbe(lo, hi, self.settings.step)

    def check_add(self, alpha, beta, gamma, probe=None, fuel=None):
        return hyperfield.check_add(alpha, beta, gamma, probe or self.probe(), self.fuel_or_default(fuel),
                                    self.settings.workers)

    def check_mul(self, alpha, beta, gamma, probe=None, fuel=None):
        return hyperfield.check_mul(alpha, beta, gamma, probe or self.probe(), self.fuel_or_default(fuel),
                                    self.settings.workers)

    # Metric and topologies
    def d(self, alpha, beta, q, fuel=None):
        """Distance check; returns (verdict, witness or None)."""
        return topology.d_check(alpha, beta, q, self.fuel_or_default(fuel))

    def signature(self, alpha, reference, fuel=None):
        return topology.lt_signature(alpha, reference, self.fuel_or_default(fuel), self.settings.workers)

    def nbhd(self, beta, alpha, reference, fuel=None):
        return topology.oriented_nbhd_member(beta, alpha, reference, self.fuel_or_default(fuel),
                                             self.settings.workers)

    def interval(self, beta, a, b, fuel=None):
        return topology.interval_open_member(beta, a, b, self.fuel_or_default(fuel))

    # Continuity harness
    def ocp(self, descriptor):
        return continuity.ocp_modulus(descriptor)

    def scan(self, descriptor, fuel=None):
        return continuity.scan_modulus(descriptor, self.settings.grid, self.fuel_or_default(fuel))

    def totalc(self, descriptor, n, pairs=None, fuel=None):
        """
        Run the continuity harness for descriptor at resolution n.

        Maps into almost naturals are checked against their own modulus; n is
        then unused.
        """
        pairs = corpus.builtin_pairs() if pairs is None else pairs
        fuel = self.fuel_or_default(fuel)
        if descriptor.codomain == continuity.NATURAL:
            return continuity.verify_modulus(descriptor, continuity.ocp_modulus(descriptor), pairs, fuel,
                                             self.settings.workers)
        return continuity.verify_totalc(descriptor, n, continuity.totalc_modulus(descriptor, n), pairs,
                                        fuel, self.settings.workers)

    # Expressions and records
    def evaluate(self, source):
        """Parse and evaluate an expression against the names bound by let."""
        return self.guarded(lambda: self.evaluator.evaluate(parse(source)))

    def let(self, name, source):
        expression = parse(source)
        self.env[name] = self.evaluator.evaluate(expression)
        return render(expression)

    def dump(self, value, path, length=None):
        """Write a sampled-prefix record."""
        records.write_record(path, value, self.settings.prefix_length if length is None else length)
        self.info(f"wrote {path}")
        return path

    def read(self, path):
        return records.read_record(path)
