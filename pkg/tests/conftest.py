"""Pytest configuration and shared fixtures"""

from fractions import Fraction

import pytest

from condquant.core import SegmentProblem, quarter_half_problem, uniform_grid_problem
from condquant.polygon import PolygonSpec


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keep user and project config files out of every test"""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("CONDQUANT_CONFIG", raising=False)
    monkeypatch.delenv("CONDQUANT_LOG_LEVEL", raising=False)
    yield tmp_path


@pytest.fixture
def quarter_half() -> SegmentProblem:
    """[0, 1] with beta = {1/4, 1/2}"""
    return quarter_half_problem()


@pytest.fixture
def grid5() -> SegmentProblem:
    """[0, 1] with beta = {1/5, ..., 1}"""
    return uniform_grid_problem(5)


@pytest.fixture
def right_end_only() -> SegmentProblem:
    return SegmentProblem(a=Fraction(0), b=Fraction(1), beta=(Fraction(1),))


@pytest.fixture
def square() -> PolygonSpec:
    return PolygonSpec(4)


@pytest.fixture
def triangle() -> PolygonSpec:
    return PolygonSpec(3)
