"""
Canonical printing of model documents.

Keys appear in the documented order, arrays are sorted by their compact
JSON text and the document is indented by two spaces, so equal models
always print to identical bytes.
"""

import json
from typing import Any, Dict, Iterable, List, Tuple, Union

from .plant import OpenDes
from .spec import SpecTransducer


def _compact(value: Any) -> str:
    return json.dumps(value, separators=(',', ':'), ensure_ascii=False)


def sorted_array(values: Iterable[Any]) -> List[Any]:
    """Sort array members lexicographically by their compact JSON text."""
    return sorted(values, key=_compact)


def dump_document(document: Dict[str, Any]) -> str:
    """Serialize a report or model document in the canonical text format."""
    return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


def _plant_document(plant: OpenDes) -> Dict[str, Any]:
    grouped: Dict[Tuple[str, str, Any, str], List[Any]] = {}
    for (source, x, event), (output, target) in plant.transitions.items():
        key = (source, event.label, _compact(output.to_json()), target)
        grouped.setdefault(key, []).append(x.to_json())

    transitions = [
        {
            'from': source,
            'inputs': sorted_array(inputs),
            'event': event,
            'output': json.loads(output),
            'to': target,
        }
        for (source, event, output, target), inputs in grouped.items()
    ]
    return {
        'kind': 'plant',
        'input_alphabet': sorted_array(plant.input_alphabet),
        'output_alphabet': sorted_array(plant.output_alphabet),
        'input_events': sorted_array(x.to_json() for x in plant.input_events),
        'controllable': sorted_array(plant.controllable),
        'uncontrollable': sorted_array(plant.uncontrollable),
        'states': sorted_array(plant.states),
        'initial': plant.initial,
        'marked': sorted_array(plant.marked),
        'transitions': sorted_array(transitions),
    }


def _spec_document(spec: SpecTransducer) -> Dict[str, Any]:
    transitions = [
        {
            'from': source,
            'input': x.to_json(),
            'output': output.to_json(),
            'to': target,
        }
        for (source, x), (output, target) in spec.transitions.items()
    ]
    return {
        'kind': 'spec',
        'states': sorted_array(spec.states),
        'initial': spec.initial,
        'marked': sorted_array(spec.marked),
        'transitions': sorted_array(transitions),
    }


def print_model(model: Union[OpenDes, SpecTransducer]) -> str:
    """
    Print a plant or specification in canonical form.

    Args:
        model: OpenDes or SpecTransducer

    Returns:
        Document text ending with a newline

    Example:
        assert parse_model(print_model(plant)) == plant
    """
    if isinstance(model, OpenDes):
        return dump_document(_plant_document(model))
    if isinstance(model, SpecTransducer):
        return dump_document(_spec_document(model))
    raise TypeError(f"Cannot print {type(model).__name__}")
