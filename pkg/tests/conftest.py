"""Shared fixtures: small cached enumerations used across test modules."""

import pytest

from nyldon import BINARY, TERNARY, enumerate_nyldon


@pytest.fixture(scope="session")
def binary10():
    """Binary member words up to length 10, as a GeneratedSet."""
    return enumerate_nyldon(BINARY, 10)


@pytest.fixture(scope="session")
def binary10_tuples(binary10):
    """Letter-tuple set for O(1) membership checks."""
    return {w.letters for w in binary10.words()}


@pytest.fixture(scope="session")
def ternary6():
    return enumerate_nyldon(TERNARY, 6)
