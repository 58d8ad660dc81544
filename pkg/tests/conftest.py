#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./tests/conftest.py

"""
Shared fixtures, hypothesis profiles and diagram strategies

Select a profile with HYPOTHESIS_PROFILE=fast|ci|deep (default ci). Tests marked
slow run only with --runslow.
"""

import os
from functools import lru_cache
from typing import List

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from diagram import BDiagram
from enumeration import enumerate_all

settings.register_profile("fast", max_examples=10, deadline=None)
settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("deep", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@lru_cache(maxsize=None)
def diagrams_of_weight(p: int) -> List[BDiagram]:
    return list(enumerate_all(p))


def diagrams(max_weight: int = 3) -> st.SearchStrategy:
    """Any diagram of weight ≤ max_weight, drawn from the exhaustive lists"""
    return st.integers(min_value=0, max_value=max_weight).flatmap(
        lambda p: st.sampled_from(diagrams_of_weight(p)))


def nonempty_diagrams(max_weight: int = 3) -> st.SearchStrategy:
    return st.integers(min_value=1, max_value=max_weight).flatmap(
        lambda p: st.sampled_from(diagrams_of_weight(p)))


## ==========================================================================
## Golden diagrams

@pytest.fixture
def chained() -> BDiagram:
    return BDiagram(3, (3, 1, 2), range(1, 6), range(1, 7), ((1, 6), (2, 4), (4, 5)))


@pytest.fixture
def two_component() -> BDiagram:
    return BDiagram(4, (1, 3, 2, 2), (1, 3, 4, 6), (1, 3, 6, 7), ((1, 6), (3, 7)))


@pytest.fixture
def three_vertex_example():
    """B, X, Y with π₁(B) = B − ½X − ½Y"""
    b = BDiagram(3, (2, 2, 2), (1, 3, 5), range(1, 7), ((1, 5),))
    x = BDiagram(3, (2, 2, 2), (1, 3, 5), range(1, 7), ((1, 3),))
    y = BDiagram(3, (2, 2, 2), (1, 3, 5), range(1, 7), ((3, 5),))
    return b, x, y
