"""Tests for closedness of specifications."""

import json

from core.conditions.closedness import bounded_closedness, check_closedness
from core.des.events import OutputEvent
from core.des.parser import parse_model
from core.des.validation import complete_inputs

Y1 = OutputEvent.of('y1')


def _plant(marked, transitions):
    return parse_model(json.dumps({
        'kind': 'plant',
        'input_alphabet': ['x1'],
        'output_alphabet': ['y1'],
        'input_events': [['x1']],
        'controllable': ['s1'],
        'uncontrollable': [],
        'states': sorted({t['from'] for t in transitions} | {t['to'] for t in transitions}),
        'initial': 'q0',
        'marked': marked,
        'transitions': transitions,
    }))


def test_two_input_spec_is_not_closed(two_input_plant, two_input_spec):
    """
    Test that a plant-marked output prefix outside K is reported.

    Both {y1} and {y2} are plant-marked one-letter prefixes of K; words are
    ordered shortest first and then by canonical event name, so {y1} wins.
    K itself is infinite (k3 and k4 loop), which only lengthens P_y(K).
    """
    verdict = check_closedness(complete_inputs(two_input_plant), two_input_spec)

    assert not verdict.holds
    assert verdict.witness == (Y1,)
    assert verdict.to_document()['witness'] == '{y1}'


def test_bounded_closedness_agrees(two_input_plant, two_input_spec):
    """Test the enumeration oracle on the same pair."""
    verdict = bounded_closedness(complete_inputs(two_input_plant), two_input_spec, depth=4)

    assert verdict.witness == (Y1,)


def test_closed_specification():
    """Test a specification whose every prefix is plant-marked."""
    # Setup
    plant = _plant(['q0'], [
        {'from': 'q0', 'inputs': [['x1']], 'event': 's1', 'output': ['y1'], 'to': 'q0'},
    ])
    spec = parse_model(json.dumps({
        'kind': 'spec',
        'states': ['k0'],
        'initial': 'k0',
        'marked': ['k0'],
        'transitions': [{'from': 'k0', 'input': ['x1'], 'output': ['y1'], 'to': 'k0'}],
    }))

    # Execute
    exact = check_closedness(plant, spec)
    bounded = bounded_closedness(plant, spec, depth=3)

    # Verify
    assert exact.holds
    assert bounded.holds


def test_bounded_closedness_sees_past_silent_outputs():
    """Test that a marked output behind a silent step is not a witness."""
    # Setup
    plant = _plant(['q2'], [
        {'from': 'q0', 'inputs': [['x1']], 'event': 's1', 'output': 'eps', 'to': 'q1'},
        {'from': 'q1', 'inputs': [['x1']], 'event': 's1', 'output': ['y1'], 'to': 'q2'},
        {'from': 'q2', 'inputs': [['x1']], 'event': 's1', 'output': 'eps', 'to': 'q2'},
    ])
    spec = parse_model(json.dumps({
        'kind': 'spec',
        'states': ['k0', 'k1'],
        'initial': 'k0',
        'marked': ['k1'],
        'transitions': [
            {'from': 'k0', 'input': ['x1'], 'output': ['y1'], 'to': 'k1'},
            {'from': 'k1', 'input': ['x1'], 'output': 'eps', 'to': 'k1'},
        ],
    }))

    # Execute
    exact = check_closedness(plant, spec)
    bounded = bounded_closedness(plant, spec, depth=1)

    # Verify
    assert exact.holds
    assert (bounded.holds, bounded.witness) == (True, None)
