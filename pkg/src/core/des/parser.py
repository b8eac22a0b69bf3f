"""
Model document parser.

Reads the JSON model family (plant and spec documents), checks every
structural invariant except reachability and input-enabledness, and
builds the immutable model objects.

Example:
    plant = load_model('tests/fixtures/two_input_plant.json')
"""

import json
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Union

from core.errors import (
    DeterminismError,
    EmptyModelError,
    ModelError,
    ModelSyntaxError,
    UndeclaredSymbolError,
)
from utils.logger import get_logger
from .events import (
    EPS,
    IDENTIFIER,
    RESERVED,
    STUTTER,
    InputEvent,
    InternalEvent,
    OutputEvent,
)
from .plant import OpenDes
from .spec import SpecTransducer
from .validation import partition_violations

logger = get_logger(__name__)

Model = Union[OpenDes, SpecTransducer]


def _require(document: Dict[str, Any], key: str) -> Any:
    if not isinstance(document, dict):
        raise ModelError(f"Expected an object holding {key!r}, got {document!r}")
    if key not in document:
        raise ModelError(f"Missing key: {key!r}")
    return document[key]


def _names(document: Dict[str, Any], key: str) -> List[str]:
    values = _require(document, key)
    if not isinstance(values, list):
        raise ModelError(f"{key!r} must be a list")
    for name in values:
        if not isinstance(name, str) or not IDENTIFIER.match(name):
            raise ModelError(f"Invalid identifier in {key!r}: {name!r}")
        if name in RESERVED:
            raise ModelError(f"Reserved name in {key!r}: {name!r}")
    if len(set(values)) != len(values):
        raise ModelError(f"Duplicate name in {key!r}")
    return values


def _symbols(value: Any, alphabet: FrozenSet[str], what: str) -> FrozenSet[str]:
    """Decode an event payload: "eps" or a list of symbol names."""
    if value == EPS:
        return frozenset()
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ModelError(f"Invalid {what} event: {value!r}")
    symbols = frozenset(value)
    if alphabet is not None:
        undeclared = sorted(symbols - alphabet)
        if undeclared:
            raise UndeclaredSymbolError(f"Undeclared {what} symbol: {undeclared[0]}")
    return symbols


def _state(name: Any, states: FrozenSet[str], where: str) -> str:
    if name not in states:
        raise UndeclaredSymbolError(f"Undeclared state in {where}: {name!r}")
    return name


def _states(document: Dict[str, Any]) -> List[str]:
    states = _names(document, 'states')
    if not states:
        raise EmptyModelError("Model declares no states")
    return states


def _parse_plant(document: Dict[str, Any]) -> OpenDes:
    input_alphabet = frozenset(_names(document, 'input_alphabet'))
    output_alphabet = frozenset(_names(document, 'output_alphabet'))
    controllable = _names(document, 'controllable')
    uncontrollable = _names(document, 'uncontrollable')
    states = _states(document)

    violations = partition_violations(
        input_alphabet, output_alphabet, controllable, uncontrollable, states
    )
    if violations:
        raise ModelError(f"Name space violation: {violations[0]}")

    state_set = frozenset(states)
    initial = _state(_require(document, 'initial'), state_set, 'initial')
    marked = [_state(name, state_set, 'marked') for name in _require(document, 'marked')]

    input_events = []
    for value in _require(document, 'input_events'):
        x = InputEvent(_symbols(value, input_alphabet, 'input'))
        if x in input_events:
            raise ModelError(f"Duplicate input event: {x.label}")
        input_events.append(x)

    events: Dict[str, InternalEvent] = {EPS: STUTTER}
    events.update({name: InternalEvent(name, controllable=True) for name in controllable})
    events.update({name: InternalEvent(name) for name in uncontrollable})

    transitions = {}
    for entry in _require(document, 'transitions'):
        source = _state(_require(entry, 'from'), state_set, 'transition')
        target = _state(_require(entry, 'to'), state_set, 'transition')
        name = _require(entry, 'event')
        if name not in events:
            raise UndeclaredSymbolError(f"Undeclared internal event: {name!r}")
        output = OutputEvent(_symbols(_require(entry, 'output'), output_alphabet, 'output'))
        inputs = _require(entry, 'inputs')
        if not isinstance(inputs, list) or not inputs:
            raise ModelError(f"Transition from {source!r} lists no inputs")
        for value in inputs:
            x = InputEvent(_symbols(value, input_alphabet, 'input'))
            if x not in input_events:
                raise UndeclaredSymbolError(f"Undeclared input event: {x.label}")
            key = (source, x, events[name])
            if key in transitions:
                raise DeterminismError(
                    f"Duplicate transition key ({source}, {x.label}, {name})"
                )
            transitions[key] = (output, target)

    return OpenDes(
        states=tuple(states),
        initial=initial,
        marked=frozenset(marked),
        input_alphabet=input_alphabet,
        output_alphabet=output_alphabet,
        input_events=tuple(input_events),
        controllable=frozenset(controllable),
        uncontrollable=frozenset(uncontrollable),
        transitions=transitions,
    )


def _parse_spec(document: Dict[str, Any]) -> SpecTransducer:
    states = _states(document)
    state_set = frozenset(states)
    initial = _state(_require(document, 'initial'), state_set, 'initial')
    marked = [_state(name, state_set, 'marked') for name in _require(document, 'marked')]

    transitions = {}
    for entry in _require(document, 'transitions'):
        source = _state(_require(entry, 'from'), state_set, 'transition')
        target = _state(_require(entry, 'to'), state_set, 'transition')
        x = InputEvent(_symbols(_require(entry, 'input'), None, 'input'))
        y = OutputEvent(_symbols(_require(entry, 'output'), None, 'output'))
        if (source, x) in transitions:
            raise DeterminismError(f"Duplicate transition key ({source}, {x.label})")
        transitions[(source, x)] = (y, target)

    return SpecTransducer(
        states=tuple(states),
        initial=initial,
        marked=frozenset(marked),
        transitions=transitions,
    )


def parse_model(text: str) -> Model:
    """
    Parse a plant or spec document.

    Args:
        text: Document text

    Returns:
        OpenDes for kind "plant", SpecTransducer for kind "spec"

    Raises:
        ModelSyntaxError: If the text is not well-formed (line and column reported)
        DeterminismError: If two transitions share a key
        UndeclaredSymbolError: If a transition references an undeclared name
        EmptyModelError: If the state set is empty
        ModelError: For any other structural problem
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelSyntaxError(e.msg, e.lineno, e.colno) from e

    if not isinstance(document, dict):
        raise ModelError("Model document must be an object")
    kind = document.get('kind')
    if kind == 'plant':
        model = _parse_plant(document)
    elif kind == 'spec':
        model = _parse_spec(document)
    else:
        raise ModelError(f"Invalid model kind: {kind!r}")

    logger.debug(f"Parsed {kind} with {len(model.states)} states")
    return model


def load_model(path: Union[str, Path]) -> Model:
    """Read a UTF-8 model file and parse it."""
    return parse_model(Path(path).read_text(encoding='utf-8'))
