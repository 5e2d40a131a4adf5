"""
DGKIT TEST FIXTURES

Shared fixtures for all tests.
"""

import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from src.dgcat.category import DGCategory
from src.ingest.parser import load_category, parse_category
from src.ingest.triple import load_triple
from src.lattice.field import CoefficientField

FIXTURES = Path(__file__).resolve().parent.parent / "data" / "fixtures"

settings.register_profile(
    "dgkit",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dgkit")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def q_field() -> CoefficientField:
    return CoefficientField()


@pytest.fixture
def f2_field() -> CoefficientField:
    return CoefficientField(2)


@pytest.fixture
def point(q_field) -> DGCategory:
    """The category k: one object, Hom = k·id."""
    return DGCategory.point(q_field, "pt")


@pytest.fixture
def a2() -> DGCategory:
    """x --f--> y"""
    return load_category(FIXTURES / "a2.json")


@pytest.fixture
def koszul() -> DGCategory:
    """One object with dξ = s; cohomology of End is 1 and s·ξ."""
    return load_category(FIXTURES / "koszul.json")


@pytest.fixture
def positive_loop() -> DGCategory:
    """One object with a square-zero endomorphism of degree 1."""
    spec = {
        "objects": ["o"],
        "homs": {"o->o": [{"name": "id_o", "degree": 0}, {"name": "e", "degree": 1}]},
    }
    return parse_category(json.dumps(spec))


@pytest.fixture
def a2_triple():
    return load_triple(FIXTURES / "a2_triple.json")
