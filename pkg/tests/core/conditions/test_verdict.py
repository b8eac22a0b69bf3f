"""Tests for the verdict value object."""

import pytest

from core.conditions.verdict import BOUNDED, EXACT, LOCAL, CheckVerdict
from core.des.events import InputEvent, OutputEvent

WITNESS = ((InputEvent.of('x1'), OutputEvent.of('y2')),)


def test_witness_required_iff_failing():
    """Test the witness consistency rule."""
    with pytest.raises(ValueError):
        CheckVerdict(True, WITNESS)
    with pytest.raises(ValueError):
        CheckVerdict(False)


def test_invalid_method_and_mode():
    """Test that unknown methods and modes are rejected."""
    with pytest.raises(ValueError, match="method"):
        CheckVerdict(True, method='guess')
    with pytest.raises(ValueError, match="mode"):
        CheckVerdict(True, mode='global')


def test_agrees():
    """Test agreement between exact and bounded verdicts."""
    failing = CheckVerdict(False, WITNESS, BOUNDED)

    assert CheckVerdict(True).agrees
    assert CheckVerdict(False, WITNESS, cross_check=failing).agrees
    assert CheckVerdict(False, WITNESS, cross_check=CheckVerdict(True, method=BOUNDED)).agrees
    assert not CheckVerdict(True, cross_check=failing).agrees


def test_document():
    """Test the verdict document."""
    verdict = CheckVerdict(
        False, WITNESS, EXACT, LOCAL, cross_check=CheckVerdict(False, WITNESS, BOUNDED)
    )

    assert verdict.to_document() == {
        'holds': False,
        'method': 'automaton-exact',
        'mode': 'local',
        'witness': '({x1}|{y2})',
        'bounded': {
            'holds': False,
            'method': 'bounded-enumeration',
            'witness': '({x1}|{y2})',
        },
    }
