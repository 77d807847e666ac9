"""
Test configuration and fixtures
"""
from typing import List

import pytest
from dotenv import load_dotenv

# Load test environment variables
load_dotenv(".env.test", override=True)

from pascal_arrays.core.config import settings
from pascal_arrays.services.graphs import a_inf
from pascal_arrays.services.typea import BracketFamily, TLFamily


# First Catalan numbers, the closed-walk counts of the half-line
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.fixture
def catalan() -> List[int]:
    """Catalan numbers C_0..C_7"""
    return list(CATALAN)


@pytest.fixture
def half_line():
    """The half-line graph rooted at its end"""
    return a_inf()


@pytest.fixture
def tl_family() -> TLFamily:
    """A fresh Temperley-Lieb half-diagram family"""
    return TLFamily()


@pytest.fixture
def bracket_family() -> BracketFamily:
    """A fresh bracket sequence family"""
    return BracketFamily()


@pytest.fixture
def test_settings(monkeypatch):
    """Global settings that individual tests may patch"""
    monkeypatch.setattr(settings, "enumeration_cap", 10)
    monkeypatch.setattr(settings, "contour_mode", "blob")
    monkeypatch.setattr(settings, "cluster_max_rank", 6)
    return settings
