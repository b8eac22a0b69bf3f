"""Tests for control pattern enumeration."""

from unittest.mock import patch

import pytest

from config import SYNTHESIS_CONFIG
from core.des.events import STUTTER, InternalEvent
from core.errors import ResourceLimitError
from core.game.patterns import ControlPattern, control_patterns


def test_patterns_largest_first(two_input_plant):
    """Test pattern order and that every pattern holds Σ_uc."""
    patterns = control_patterns(two_input_plant)

    assert [p.label for p in patterns] == ['{s1,s2,su}', '{s1,su}', '{s2,su}', '{su}']


def test_fully_controllable_plant_has_empty_pattern(cyclic_plant):
    """Test that the empty pattern exists when Σ_uc is empty."""
    patterns = control_patterns(cyclic_plant)

    assert patterns[-1] == ControlPattern(frozenset())
    assert len(patterns) == 4


def test_pattern_allows():
    """Test membership, with stutter always allowed."""
    pattern = ControlPattern.of('su')

    assert pattern.allows(InternalEvent('su'))
    assert not pattern.allows(InternalEvent('s1', controllable=True))
    assert ControlPattern(frozenset()).allows(STUTTER)


def test_pattern_cap(two_input_plant):
    """Test that too many controllable events are refused."""
    with patch.dict(SYNTHESIS_CONFIG, {'max_controllable': 1}):
        with pytest.raises(ResourceLimitError, match="group events"):
            control_patterns(two_input_plant)
