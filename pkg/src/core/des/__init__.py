"""
Open DES core: events, plant and specification models, parsing, printing
and validation.

Components:
- events: input, output and internal events, canonical ordering
- plant: OpenDes and its enabled moves
- spec: SpecTransducer (deterministic Mealy specification)
- parser / printer: the JSON model file family
- validation: reports and input-enabledness completion
"""

from .events import (
    BOTTOM,
    EPS,
    SILENT_INPUT,
    SILENT_OUTPUT,
    STUTTER,
    InputEvent,
    InternalEvent,
    OutputEvent,
    canonical_key,
    parse_input_label,
    parse_output_label,
    word_key,
)
from .parser import load_model, parse_model
from .plant import Move, OpenDes
from .printer import dump_document, print_model, sorted_array
from .spec import SpecTransducer
from .validation import (
    SpecValidationReport,
    ValidationReport,
    complete_inputs,
    validate_plant,
    validate_spec,
)

__all__ = [
    'BOTTOM',
    'EPS',
    'SILENT_INPUT',
    'SILENT_OUTPUT',
    'STUTTER',
    'InputEvent',
    'InternalEvent',
    'OutputEvent',
    'canonical_key',
    'parse_input_label',
    'parse_output_label',
    'word_key',
    'load_model',
    'parse_model',
    'Move',
    'OpenDes',
    'dump_document',
    'print_model',
    'sorted_array',
    'SpecTransducer',
    'SpecValidationReport',
    'ValidationReport',
    'complete_inputs',
    'validate_plant',
    'validate_spec',
]
