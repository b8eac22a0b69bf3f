"""Tests for closed-loop composition."""

import pytest

from core.des.events import InputEvent
from core.des.validation import complete_inputs
from core.errors import ModelMismatchError
from core.game.patterns import ControlPattern
from core.supervisor.closed_loop import compose, state_name
from core.supervisor.machine import SupervisorMachine
from core.supervisor.simulation import EnvPolicy, marking_distances, simulate

X1 = InputEvent.of('x1')
X2 = InputEvent.of('x2')


def _blocking_supervisor(plant):
    return SupervisorMachine(
        states=('m0',),
        initial='m0',
        pattern_of={('m0', x): ControlPattern(frozenset()) for x in plant.input_events},
        update={},
        marked=frozenset({'m0'}),
        plant_fingerprint=plant.fingerprint(),
    )


def test_compose(plant, supervisor):
    """Test state naming and the supervised transitions."""
    # Execute
    loop = compose(plant, supervisor)

    # Verify
    assert loop.machine.initial == state_name('q0', 'm0') == 'q0@m0'
    assert [m.event.name for m in loop.machine.moves('q0@m0', X1)] == ['s1']
    assert loop.patterns[('q0@m0', X1)] == ControlPattern.of('s1', 'su')
    assert loop.components['q0@m0'] == ('q0', 'm0')
    assert loop.blocked() == []


def test_closed_loop_markings(plant, supervisor):
    """Test plant marking against product marking."""
    loop = compose(plant, supervisor)

    assert loop.product_marked < loop.machine.marked
    assert {loop.components[s][0] for s in loop.machine.marked} <= plant.marked


def test_fingerprint_mismatch(cyclic_plant, supervisor):
    """Test that a supervisor only composes with its own plant."""
    with pytest.raises(ModelMismatchError, match="different plant"):
        compose(complete_inputs(cyclic_plant), supervisor)


def test_blocked_inputs(cyclic_plant):
    """Test that a pattern disabling every move blocks inputs."""
    # Setup
    plant = complete_inputs(cyclic_plant)

    # Execute
    loop = compose(plant, _blocking_supervisor(plant))

    # Verify
    assert loop.machine.states == ('q0@m0',)
    assert loop.blocked() == [('q0@m0', X1), ('q0@m0', X2)]


def test_missing_pattern(cyclic_plant):
    """Test that a supervisor without a needed pattern is refused."""
    plant = complete_inputs(cyclic_plant)
    partial = SupervisorMachine(
        states=('m0',),
        initial='m0',
        pattern_of={('m0', X1): ControlPattern(frozenset())},
        update={},
        marked=frozenset(),
        plant_fingerprint=plant.fingerprint(),
    )

    with pytest.raises(ModelMismatchError, match="no pattern"):
        compose(plant, partial)


def test_plays_reach_product_marking(plant, supervisor):
    """Test that adversarial plays stay coaccessible and reach the product marking in time."""
    # Setup
    loop = compose(plant, supervisor)
    bound = len(loop.machine.states)
    distance = marking_distances(loop)

    # Verify
    assert set(distance) == set(loop.machine.states)
    assert max(distance.values()) < bound
    for seed in range(20):
        trace = simulate(loop, EnvPolicy.adversarial(seed), steps=2 * bound)
        visited = [loop.machine.initial] + [step.state for step in trace]
        assert len(trace) == 2 * bound
        assert all(distance[state] < bound for state in visited)
        assert any(state in loop.product_marked for state in visited[:bound + 1])
