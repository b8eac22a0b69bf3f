"""
Shared fixtures: model files under tests/fixtures and seeded random models.
"""

import random
from pathlib import Path

import pytest

from core.des.events import SILENT_OUTPUT, InputEvent, InternalEvent, OutputEvent
from core.des.parser import load_model
from core.des.plant import OpenDes
from core.des.spec import SpecTransducer

FIXTURES = Path(__file__).parent / 'fixtures'


@pytest.fixture
def fixture_path():
    """Resolve a file name under tests/fixtures"""
    return lambda name: str(FIXTURES / name)


@pytest.fixture
def joint_input_plant():
    """Plant declaring {x1}, {x2} and {x1,x2}; not input-enabled"""
    return load_model(FIXTURES / 'joint_input_plant.json')


@pytest.fixture
def two_input_plant():
    """Plant over {x1} and {x2} with a realizable specification"""
    return load_model(FIXTURES / 'two_input_plant.json')


@pytest.fixture
def two_input_spec():
    """Specification over two_input_plant; marked after two steps, k3 and k4 loop so K is infinite"""
    return load_model(FIXTURES / 'two_input_spec.json')


@pytest.fixture
def unrealizable_spec():
    """Single-state specification that an uncontrollable event violates"""
    return load_model(FIXTURES / 'unrealizable_spec.json')


@pytest.fixture
def cyclic_plant():
    """Fully controllable plant with two sink states"""
    return load_model(FIXTURES / 'cyclic_plant.json')


X1 = InputEvent.of('x1')
X2 = InputEvent.of('x2')
Y1 = OutputEvent.of('y1')
Y2 = OutputEvent.of('y2')
OUTPUTS = (Y1, Y2, SILENT_OUTPUT)
UNCONTROLLABLE = InternalEvent('su')
CONTROLLABLE = tuple(InternalEvent(f"s{i}", controllable=True) for i in (1, 2, 3))


def random_plant(rng: random.Random, max_states: int = 10, controllable: int = 3) -> OpenDes:
    """
    Random plant over {x1}, {x2} in which (state, input, output) fixes the move.

    Rows list the uncontrollable move first, then controllable moves by
    name. A chain q0 -> q1 -> ... through the first move of each (q, x1) row
    keeps every state reachable, and the last state is always marked.
    """
    size = rng.randint(2, max_states)
    states = [f"q{i}" for i in range(size)]
    events = (UNCONTROLLABLE,) + CONTROLLABLE[:controllable]
    rows = {}
    for state in states:
        for x in (X1, X2):
            count = rng.randint(0, len(OUTPUTS))
            chosen = sorted(rng.sample(events, count), key=lambda e: (e.controllable, e.name))
            outputs = rng.sample(OUTPUTS, count)
            rows[(state, x)] = [
                [event, output, rng.choice(states)]
                for event, output in zip(chosen, outputs)
            ]
    for i in range(1, size):
        row = rows[(states[i - 1], X1)]
        if not row:
            row.append([events[1], Y1, states[i]])
        row[0][2] = states[i]

    transitions = {
        (state, x, event): (output, target)
        for (state, x), row in rows.items()
        for event, output, target in row
    }
    marked = {state for state in states if rng.random() < 0.3} | {states[-1]}
    return OpenDes(
        states=tuple(states),
        initial='q0',
        marked=frozenset(marked),
        input_alphabet=frozenset({'x1', 'x2'}),
        output_alphabet=frozenset({'y1', 'y2'}),
        input_events=(X1, X2),
        controllable=frozenset(e.name for e in events if e.controllable),
        uncontrollable=frozenset({UNCONTROLLABLE.name}),
        transitions=transitions,
    )


def random_spec(rng: random.Random, max_states: int = 4) -> SpecTransducer:
    """
    Random input-complete transducer in which every state is reachable and
    coaccessible.
    """
    size = rng.randint(1, max_states)
    states = [f"k{i}" for i in range(size)]
    transitions = {
        (state, x): (rng.choice(OUTPUTS), rng.choice(states))
        for state in states
        for x in (X1, X2)
    }
    for i in range(1, size):
        output, _ = transitions[(states[i - 1], X1)]
        transitions[(states[i - 1], X1)] = (output, states[i])
    marked = {state for state in states if rng.random() < 0.3} | {states[-1]}
    return SpecTransducer(
        states=tuple(states),
        initial='k0',
        marked=frozenset(marked),
        transitions=transitions,
    )


def derived_spec(rng: random.Random, plant: OpenDes) -> SpecTransducer:
    """
    Transducer that mirrors the plant and answers each (q, x) with the output
    of its first move, the uncontrollable one when there is one.

    With probability 0.3 one answer is replaced by a random output, which
    usually makes the pair unrealizable.
    """
    transitions = {}
    for state in plant.states:
        k = state.replace('q', 'k')
        for x in plant.input_events:
            moves = plant.enabled_moves(state, x)
            first = min(moves, key=lambda m: (m.event.controllable, m.event.name), default=None)
            if first is None:
                transitions[(k, x)] = (SILENT_OUTPUT, k)
            else:
                transitions[(k, x)] = (first.output, first.target.replace('q', 'k'))
    if rng.random() < 0.3:
        key = rng.choice(sorted(transitions, key=lambda key: (key[0], key[1].label)))
        transitions[key] = (rng.choice(OUTPUTS), transitions[key][1])
    return SpecTransducer(
        states=tuple(state.replace('q', 'k') for state in plant.states),
        initial='k0',
        marked=frozenset(state.replace('q', 'k') for state in plant.marked),
        transitions=transitions,
    )


@pytest.fixture
def random_case():
    """Build a (plant, spec) pair from a seed; most specs mirror the plant"""
    def build(seed: int):
        rng = random.Random(seed)
        plant = random_plant(rng)
        if rng.random() < 0.7:
            return plant, derived_spec(rng, plant)
        return plant, random_spec(rng)
    return build

