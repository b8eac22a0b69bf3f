"""Tests for the end-to-end synthesis pipeline."""

import json

import pytest

from core.des.events import InputEvent, OutputEvent
from core.des.parser import parse_model
from core.errors import SpecificationError, ValidationError
from core.lang.enumeration import io_language
from core.supervisor.synthesis import prepare_plant, synthesize

X1 = InputEvent.of('x1')
X2 = InputEvent.of('x2')


def _executable(result, memory, x):
    """Event names the supervisor leaves executable at one memory state."""
    plant = result.plant
    env = result.supervisor.nodes[memory]
    pattern = result.supervisor.pattern(memory, x)
    return {
        move.event.name
        for move in plant.moves(env.plant_state, x)
        if pattern.allows(move.event)
    }


@pytest.fixture
def result(two_input_plant, two_input_spec):
    """Synthesis result of the realizable pair"""
    return synthesize(two_input_plant, two_input_spec)


def test_realizable(result):
    """Test that the pipeline builds and verifies a supervisor."""
    assert result.realizable
    assert result.supervisor is not None
    assert result.closed_loop is not None
    assert result.verification.nonblocking.holds
    assert result.verification.safe_equality.holds
    assert result.verification.marked_product_equality.holds


def test_executable_sets(result):
    """Test the events the supervisor leaves executable along two histories."""
    update = result.supervisor.update
    after_x1 = update[('m0', X1, result.plant.event('s1'))]
    after_x2 = update[('m0', X2, result.plant.event('s2'))]

    assert _executable(result, 'm0', X1) == {'s1'}
    assert _executable(result, 'm0', X2) == {'s2'}
    assert _executable(result, after_x1, X1) == {'su'}
    assert _executable(result, after_x1, X2) == {'s2'}
    assert _executable(result, after_x2, X2) == {'su'}


def test_plant_marking_diverges(result):
    """Test that plant marking alone admits a word outside K."""
    verification = result.verification

    assert not verification.marked_plant_equality.holds
    assert verification.marked_plant_equality.witness == ((X2, OutputEvent.of('y2')),)
    assert verification.marking_divergence


def test_report(result):
    """Test the synthesis report layout."""
    report = result.report

    assert report['kind'] == 'synthesis'
    assert report['realizable'] is True
    assert report['conditions']['output_controllable_literal']['holds'] is False
    assert report['conditions']['output_controllable_local']['holds'] is True
    assert report['conditions']['closed']['holds'] is False
    assert report['audit'] == {'conditions_hold': False, 'consistent': False}
    assert report['verification']['nonblocking']['holds'] is True
    json.dumps(report)


def test_unrealizable(two_input_plant, unrealizable_spec):
    """Test that a losing game yields no supervisor."""
    result = synthesize(two_input_plant, unrealizable_spec)

    assert not result.realizable
    assert result.supervisor is None
    assert result.report['verification'] is None
    assert result.report['audit']['consistent'] is True


def test_empty_spec_raises(two_input_plant):
    """Test that an empty specification is refused."""
    spec = parse_model(json.dumps({
        'kind': 'spec',
        'states': ['k0'],
        'initial': 'k0',
        'marked': [],
        'transitions': [
            {'from': 'k0', 'input': ['x1'], 'output': 'eps', 'to': 'k0'},
            {'from': 'k0', 'input': ['x2'], 'output': 'eps', 'to': 'k0'},
        ],
    }))

    with pytest.raises(SpecificationError, match="empty"):
        synthesize(two_input_plant, spec)


def test_incomplete_spec_raises(joint_input_plant, two_input_spec):
    """Test that a spec undefined on a declared input is refused."""
    with pytest.raises(SpecificationError, match="not input-complete"):
        synthesize(joint_input_plant, two_input_spec)


def test_prepare_plant_rejects_unreachable(fixture_path):
    """Test that validation failures stop the pipeline."""
    with open(fixture_path('cyclic_plant.json'), encoding='utf-8') as f:
        document = json.load(f)
    document['states'].append('q9')

    with pytest.raises(ValidationError) as excinfo:
        prepare_plant(parse_model(json.dumps(document)))

    assert excinfo.value.report.unreachable == ('q9',)


def test_product_marked_language_is_k(result):
    """Test that the depth-two product-marked language is exactly K's four words."""
    y1, y2 = OutputEvent.of('y1'), OutputEvent.of('y2')
    loop = result.closed_loop

    words = io_language(loop.machine, 2, marked_only=True, accepting=loop.product_marked)

    assert set(words) == {
        ((X1, y1), (X1, y2)),
        ((X1, y1), (X2, y1)),
        ((X2, y2), (X2, y1)),
        ((X2, y2), (X1, y2)),
    }
