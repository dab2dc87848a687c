"""Value corpora for the harness and the property suites.

A corpus is built from a stream of integers: a seeded generator by default,
or any iterable passed as ``source`` (the property suites pass pypbt draws).
"""

import random
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .approximation import approximate, monotone_limit, sup_of_values
from .almost import ar_embed
from .hyperfield import add
from .oriented import OrientedReal, cut_from_bounded_sequence, cut_intersection, embed_rational, shift
from .sequences import CyclicRule


class CorpusPair(NamedTuple):
    pair_id: str
    left: OrientedReal
    right: OrientedReal


class _Draws:
    """Bounded choices read off a stream of integers."""

    def __init__(self, seed=0, source=None):
        if source is None:
            rng = random.Random(seed)
            source = iter(lambda: rng.getrandbits(32), None)
        self.source = iter(source)

    def randrange(self, stop):
        return next(self.source) % stop

    def randint(self, lo, hi):
        return lo + self.randrange(hi - lo + 1)

    def choice(self, items):
        return items[self.randrange(len(items))]


def _rational(rng, lo, hi, max_denominator=16):
    d = rng.randint(1, max_denominator)
    n = rng.randint(int(lo * d), int(hi * d))
    return Fraction(n, d)


def _unit_point(rng):
    """A rational in (0, 1]."""
    d = rng.choice((2, 4, 8, 16, 32, 3, 5, 6, 7, 12))
    return Fraction(rng.randint(1, d), d)


def unit_corpus(seed=0, size=24, source=None):
    """
    Values of the temporal interval (0, 1] whose order against embeddings is
    decidable: embeddings, intersections, translates and embedded approximations.
    """
    rng = _Draws(seed, source)
    values = [embed_rational(Fraction(1)), embed_rational(Fraction(1, 2))]
    while len(values) < size:
        kind = rng.randrange(5)
        a = _unit_point(rng)
        if kind <= 1:
            values.append(embed_rational(a))
        elif kind == 2:
            values.append(cut_intersection(embed_rational(a), embed_rational(_unit_point(rng))))
        elif kind == 3:
            b = _unit_point(rng)
            low, high = min(a, b), max(a, b)
            values.append(shift(embed_rational(low / 2), low / 2) if high == low
                          else shift(embed_rational(high - low), low))
        else:
            values.append(ar_embed(approximate(embed_rational(a), rng.randint(1, 6))))
    return _keep_unit(values)


def _keep_unit(values):
    unit = []
    for value in values:
        sup = value.known_sup(1024)
        if sup is None or 0 < sup <= 1:
            unit.append(value)
    return unit


def general_corpus(seed=0, size=200, source=None):
    """Mixed constructions over [-2, 2]: embeddings, bounded-sequence cuts, meets, sums, limits."""
    rng = _Draws(seed, source)
    values = []
    while len(values) < size:
        kind = rng.randrange(6)
        if kind == 0 or not values:
            values.append(embed_rational(_rational(rng, -2, 2)))
        elif kind == 1:
            listed = tuple(_rational(rng, -2, 2) for _ in range(rng.randint(1, 4)))
            values.append(cut_from_bounded_sequence(CyclicRule(listed), max(listed) + rng.randint(1, 3)))
        elif kind == 2:
            listed = [_rational(rng, -2, 2) for _ in range(rng.randint(1, 4))]
            values.append(sup_of_values(listed, max(listed) + Fraction(1, rng.randint(1, 4))))
        elif kind == 3:
            values.append(cut_intersection(rng.choice(values), rng.choice(values)))
        elif kind == 4:
            values.append(add(rng.choice(values), embed_rational(_rational(rng, -1, 1))))
        else:
            top = _rational(rng, -1, 2)
            steps = sorted(top - Fraction(1, 2 ** i) for i in range(1, rng.randint(2, 5)))
            values.append(monotone_limit([embed_rational(s) for s in steps], top, fuel=64, span=4))
    return values


def pairs(values, limit=None):
    """All pairs i < j, identified as "i:j"."""
    result = []
    for (i, left), (j, right) in combinations(enumerate(values), 2):
        result.append(CorpusPair(f"{i}:{j}", left, right))
        if limit is not None and len(result) >= limit:
            break
    return result


def builtin_pairs(seed=0, size=24):
    return pairs(unit_corpus(seed, size))


def load_corpus(path, evaluate):
    """
    One expression per line; blank lines and '#' comments are skipped.

    ``evaluate`` turns source text into an oriented real.
    """
    values = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            text = line.split("#", 1)[0].strip()
            if text:
                values.append(evaluate(text))
    return values
