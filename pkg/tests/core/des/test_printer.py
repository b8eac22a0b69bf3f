"""Tests for canonical model printing."""

import json

import pytest

from core.des.parser import parse_model
from core.des.printer import dump_document, print_model, sorted_array
from core.des.validation import complete_inputs


def test_plant_print_parses_back(joint_input_plant):
    """Test that a printed plant parses to an equal plant."""
    text = print_model(joint_input_plant)

    assert parse_model(text) == joint_input_plant


def test_completed_plant_prints_stutter(cyclic_plant):
    """Test that stutter transitions print with the eps event name."""
    # Execute
    document = json.loads(print_model(complete_inputs(cyclic_plant)))

    # Verify
    stutter = [t for t in document['transitions'] if t['event'] == 'eps']
    assert {t['from'] for t in stutter} == {'q1', 'q3'}
    assert all(t['output'] == 'eps' and t['inputs'] == [['x1'], ['x2']] for t in stutter)


def test_spec_print_is_stable(two_input_spec):
    """Test that printing is byte-identical after a reparse."""
    text = print_model(two_input_spec)

    assert print_model(parse_model(text)) == text
    assert text.endswith('\n')


def test_fingerprint_tracks_content(two_input_plant, joint_input_plant):
    """Test that fingerprints are stable and distinguish plants."""
    assert two_input_plant.fingerprint() == parse_model(print_model(two_input_plant)).fingerprint()
    assert two_input_plant.fingerprint() != joint_input_plant.fingerprint()


def test_sorted_array_orders_by_compact_json():
    """Test the array ordering rule."""
    # ',' sorts before ']'
    assert sorted_array([['x2'], ['x1'], ['x1', 'x2']]) == [['x1', 'x2'], ['x1'], ['x2']]


def test_dump_document_layout():
    """Test two-space indentation and the trailing newline."""
    assert dump_document({'a': [1]}) == '{\n  "a": [\n    1\n  ]\n}\n'


def test_print_rejects_other_objects():
    """Test that only models print."""
    with pytest.raises(TypeError):
        print_model({'kind': 'plant'})
