"""Tests for word projections and formatting."""

import pytest

from core.des.events import SILENT_INPUT, SILENT_OUTPUT, STUTTER, InputEvent, InternalEvent, OutputEvent
from core.lang.words import format_word, project

X1 = InputEvent.of('x1')
Y1 = OutputEvent.of('y1')
Y2 = OutputEvent.of('y2')
S1 = InternalEvent('s1', controllable=True)
SU = InternalEvent('su')

WORD = ((X1, S1, Y1), (X1, STUTTER, SILENT_OUTPUT), (SILENT_INPUT, SU, Y2))


def test_pair_projections_keep_positions():
    """Test that xy and xp projections keep silent steps."""
    assert project(WORD, 'xy') == ((X1, Y1), (X1, SILENT_OUTPUT), (SILENT_INPUT, Y2))
    assert project(WORD, 'xp') == ((X1, S1), (X1, STUTTER), (SILENT_INPUT, SU))


def test_single_projections_drop_silence():
    """Test that x and y projections drop silent events."""
    assert project(WORD, 'x') == (X1, X1)
    assert project(WORD, 'y') == (Y1, Y2)


def test_unknown_axis_raises():
    """Test that an unknown axis is rejected."""
    with pytest.raises(ValueError, match="Invalid projection axis"):
        project(WORD, 'p')


def test_format_word():
    """Test the printed forms of words."""
    assert format_word(()) == 'eps'
    assert format_word(project(WORD, 'xy')) == '({x1}|{y1})({x1}|eps)(eps|{y2})'
    assert format_word(WORD[:1]) == '({x1}|s1|{y1})'
    assert format_word((Y1, Y2)) == '{y1} {y2}'
