"""
Supervisor documents in the model file family.

Example:
    text = dump_supervisor(supervisor)
    again = parse_supervisor(text, plant)
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from core.des.events import EPS, InputEvent
from core.des.plant import OpenDes
from core.des.printer import dump_document, sorted_array
from core.errors import ModelError, ModelSyntaxError, UndeclaredSymbolError
from core.game.patterns import ControlPattern
from .machine import SupervisorMachine


def supervisor_document(supervisor: SupervisorMachine) -> Dict[str, Any]:
    patterns = [
        {'state': memory, 'input': x.to_json(), 'enable': sorted(pattern.enabled)}
        for (memory, x), pattern in supervisor.pattern_of.items()
    ]
    updates = [
        {'state': memory, 'input': x.to_json(), 'event': event.label, 'to': target}
        for (memory, x, event), target in supervisor.update.items()
    ]
    return {
        'kind': 'supervisor',
        'states': sorted_array(supervisor.states),
        'initial': supervisor.initial,
        'pattern': sorted_array(patterns),
        'update': sorted_array(updates),
        'marked': sorted_array(supervisor.marked),
        'plant': supervisor.plant_fingerprint,
    }


def dump_supervisor(supervisor: SupervisorMachine) -> str:
    """Canonical supervisor text."""
    return dump_document(supervisor_document(supervisor))


def _input(value: Any) -> InputEvent:
    if value == EPS:
        return InputEvent()
    if not isinstance(value, list):
        raise ModelError(f"Invalid input event: {value!r}")
    return InputEvent(frozenset(value))


def parse_supervisor(text: str, plant: OpenDes) -> SupervisorMachine:
    """
    Parse a supervisor document against the plant it controls.

    Args:
        text: Supervisor document
        plant: Plant used to resolve internal event names

    Raises:
        ModelSyntaxError: If the text is not well-formed
        ModelError: If the document is structurally invalid
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelSyntaxError(e.msg, e.lineno, e.colno) from e
    if not isinstance(document, dict) or document.get('kind') != 'supervisor':
        raise ModelError("Not a supervisor document")

    try:
        states = document['states']
        pattern_of = {
            (entry['state'], _input(entry['input'])): ControlPattern(frozenset(entry['enable']))
            for entry in document['pattern']
        }
        update = {
            (entry['state'], _input(entry['input']), plant.event(entry['event'])): entry['to']
            for entry in document['update']
        }
        initial = document['initial']
        marked = frozenset(document['marked'])
        fingerprint = document['plant']
    except (KeyError, TypeError) as e:
        raise ModelError(f"Malformed supervisor document: {e}") from e

    known = set(states)
    referenced = {initial} | marked | {m for m, _ in pattern_of} | set(update.values())
    unknown = sorted(referenced - known)
    if unknown:
        raise UndeclaredSymbolError(f"Undeclared memory state: {unknown[0]}")

    return SupervisorMachine(
        states=tuple(states),
        initial=initial,
        pattern_of=pattern_of,
        update=update,
        marked=marked,
        plant_fingerprint=fingerprint,
    )


def load_supervisor(path: Union[str, Path], plant: OpenDes) -> SupervisorMachine:
    """Read and parse a supervisor file."""
    return parse_supervisor(Path(path).read_text(encoding='utf-8'), plant)
