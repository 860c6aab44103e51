from functools import lru_cache
from pathlib import Path

import pytest

from frobtft.frobvect import load_algebra, normalize_special
from frobtft.fusioncat import load_category
from frobtft.worldsheet import load_worldsheet

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "frobtft" / "fixtures"


@lru_cache(maxsize=None)
def category(name):
    return load_category(FIXTURES / "categories" / f"{name}.json")


@lru_cache(maxsize=None)
def algebra(name):
    return load_algebra(FIXTURES / "algebras" / f"{name}.json")


@lru_cache(maxsize=None)
def normalized(name):
    return normalize_special(algebra(name))


@lru_cache(maxsize=None)
def worldsheet(name):
    return load_worldsheet(FIXTURES / "worldsheets" / f"{name}.json")


@pytest.fixture
def fixtures_dir():
    return FIXTURES
