"""Pytest fixtures for orientedcut tests."""

import os
import random
import shutil
import tempfile
from fractions import Fraction

import pytest

from orientedcut.config import ENV_PREFIX, Settings
from orientedcut.corpus import general_corpus, unit_corpus as build_unit_corpus
from tests.domains import SEED, draw, ints


@pytest.fixture(autouse=True)
def reset_environment():
    """Drop ORC_* variables after each test to avoid leaking state."""
    yield
    for key in [k for k in os.environ if k.startswith(ENV_PREFIX)]:
        os.environ.pop(key, None)


@pytest.fixture
def settings():
    """Default settings with a smaller fuel to keep searches quick."""
    return Settings(fuel=256)


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files. Cleaned up after test."""
    test_dir = tempfile.mkdtemp()
    yield test_dir
    if os.path.exists(test_dir):
        shutil.rmtree(test_dir)


@pytest.fixture(autouse=True)
def seeded_domains():
    """pypbt samples through random; reseed so every test replays the same draws."""
    random.seed(SEED)


@pytest.fixture(scope="session")
def oriented_corpus():
    """Mixed constructions used by the property suites."""
    random.seed(SEED + 7)
    return general_corpus(size=200, source=ints(0, 2 ** 31))


@pytest.fixture(scope="session")
def unit_corpus():
    """Values of (0, 1] with decidable signatures."""
    random.seed(SEED + 3)
    return build_unit_corpus(size=24, source=ints(0, 2 ** 31))


@pytest.fixture
def dyadic_pairs():
    """Rational pairs with power-of-two denominators."""
    numerators, exponents = ints(-64, 64), ints(0, 6)
    points = (Fraction(n, 2 ** k) for n, k in zip(numerators, exponents))
    return list(zip(draw(points, 100), draw(points, 100)))
