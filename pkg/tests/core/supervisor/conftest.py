"""
Shared fixtures for supervisor tests.
"""

import pytest

from core.supervisor.synthesis import synthesize


@pytest.fixture
def synthesized(two_input_plant, two_input_spec):
    """Realizable synthesis result for the two-input pair"""
    return synthesize(two_input_plant, two_input_spec)


@pytest.fixture
def plant(synthesized):
    """Completed plant the supervisor was built for"""
    return synthesized.plant


@pytest.fixture
def supervisor(synthesized):
    """Synthesized supervisor machine"""
    return synthesized.supervisor
