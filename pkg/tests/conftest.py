"""
Pytest configuration and shared fixtures

Catalog presentations are cached by make_block, so session-scoped fixtures
only save the lookup; the first test touching a block pays for completion.

Learn more: https://docs.pytest.org/en/stable/fixture.html
"""

import random

import pytest

from services.block_catalog import BlockId, make_block
from services.quiver_core import GF2, GaloisField, field_of
from services.rewrite_engine import AlgebraPresentation


def block(family: str, r: int, c=None, field: GaloisField = GF2) -> AlgebraPresentation:
    """Completed catalog block over field (GF(2) by default)."""
    return make_block(BlockId(family, r, c), field)


@pytest.fixture(autouse=True)
def _no_field_override(monkeypatch):
    """Tests pick their field explicitly; ignore a GQA_FIELD from the shell."""
    monkeypatch.delenv("GQA_FIELD", raising=False)


@pytest.fixture(scope="session")
def gf2() -> GaloisField:
    return GF2


@pytest.fixture(scope="session")
def gf4() -> GaloisField:
    """GF(4) = GF(2)[x] / (x^2 + x + 1)."""
    return field_of(2)


@pytest.fixture(scope="function")
def rng() -> random.Random:
    """
    Seeded RNG for property-style tests.

    Scope: function (each test sees the same sequence)
    """
    return random.Random(20240611)


@pytest.fixture(scope="session")
def a1() -> AlgebraPresentation:
    return block("A", 1)


@pytest.fixture(scope="session")
def a2() -> AlgebraPresentation:
    return block("A", 2)


@pytest.fixture(scope="session")
def b2() -> AlgebraPresentation:
    return block("B", 2)


@pytest.fixture(scope="session")
def c2() -> AlgebraPresentation:
    return block("C", 2)


@pytest.fixture(scope="session")
def d1c2() -> AlgebraPresentation:
    return block("D1C", 2)


@pytest.fixture(scope="session")
def catalog():
    """The block(family, r, c=None, field=GF2) builder, for parametrized tests."""
    return block
