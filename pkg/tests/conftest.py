"""Shared fixtures and configuration for pytest."""

import os
import sys

import pytest

# Add the project root to the path to make imports work correctly
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from ng_chromatic.constructions import complete, cycle, path  # noqa: E402
from ng_chromatic.enhanced_logger import logger  # noqa: E402
from ng_chromatic.graph import complement  # noqa: E402


@pytest.fixture(autouse=True)
def reset_log_level():
    """Keep a --debug invocation from leaking into later tests."""
    yield
    logger.set_debug(False)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def c4_complement():
    return complement(cycle(4))
