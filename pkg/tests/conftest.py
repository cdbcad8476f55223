"""
Shared Test Fixtures for ALGCOEF Test Suite

Provides fields, the worked equations and small factories used across the
unit tests.
"""

import random
from typing import Dict, Sequence, Tuple

import pytest

from src.arith import BiPoly, PrimeField, UniPoly
from src.cli.parser import parse_poly
from src.config import ALGCOEFConfig
from src.evaluation import random_instance


TOY = "x + y - y^3"
CATALAN = "y - x - y^2"
CUBIC = "x - (1+x)*y + x^2*y^2 + (1+x)*y^3"
QUARTIC = "-x + (1+x)*y - (1+x^2)*y^2 - y^3 + (1+x)*y^4"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running checks at large p or many big indices")


# =============================================================================
# Configuration Fixtures
# =============================================================================


@pytest.fixture
def test_config() -> ALGCOEFConfig:
    """Create a test configuration."""
    return ALGCOEFConfig.for_testing()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep ALGCOEF_* variables from the shell out of the tests."""
    import os

    for key in list(os.environ):
        if key.startswith("ALGCOEF_"):
            monkeypatch.delenv(key, raising=False)


# =============================================================================
# Field Fixtures
# =============================================================================


@pytest.fixture
def gf5() -> PrimeField:
    return PrimeField(5)


@pytest.fixture
def gf7() -> PrimeField:
    return PrimeField(7)


@pytest.fixture
def gf11() -> PrimeField:
    return PrimeField(11)


# =============================================================================
# Equation Fixtures
# =============================================================================


@pytest.fixture
def toy_e() -> BiPoly:
    """x + y - y^3 over F_5."""
    return parse_poly(TOY, 5)


@pytest.fixture
def catalan_e() -> BiPoly:
    """y - x - y^2 over F_7."""
    return parse_poly(CATALAN, 7)


@pytest.fixture
def cubic_e() -> BiPoly:
    """x - (1+x)y + x^2 y^2 + (1+x)y^3 over F_7."""
    return parse_poly(CUBIC, 7)


@pytest.fixture
def quartic_e() -> BiPoly:
    """The quartic over F_11."""
    return parse_poly(QUARTIC, 11)


# =============================================================================
# Factories
# =============================================================================


@pytest.fixture
def make_poly():
    """Factory fixture for UniPoly from a coefficient list (low degree first)."""
    def _make_poly(coeffs: Sequence[int], p: int = 5) -> UniPoly:
        return UniPoly(PrimeField(p), tuple(coeffs))
    return _make_poly


@pytest.fixture
def make_bipoly():
    """Factory fixture for BiPoly from {(i, j): c}."""
    def _make_bipoly(terms: Dict[Tuple[int, int], int], p: int = 5) -> BiPoly:
        return BiPoly.from_terms(PrimeField(p), terms)
    return _make_bipoly


@pytest.fixture
def make_random_instance():
    """Factory fixture for seeded random valid equations."""
    def _make(p: int = 5, d: int = 3, h: int = 2, seed: int = 0) -> BiPoly:
        return random_instance(random.Random(seed), p, d, h)
    return _make
