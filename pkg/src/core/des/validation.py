"""
Plant and specification validation plus input-enabledness completion.

Validation returns reports; nothing here raises on a failed check.
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Set, Tuple

from utils.logger import get_logger
from .events import SILENT_OUTPUT, STUTTER, InputEvent, canonical_key
from .plant import OpenDes
from .spec import SpecTransducer

logger = get_logger(__name__)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_plant; ok iff every list is empty."""

    unreachable: Tuple[str, ...]
    not_input_enabled: Tuple[Tuple[str, InputEvent], ...]
    partition_violations: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (self.unreachable or self.not_input_enabled or self.partition_violations)

    def to_document(self) -> Dict[str, Any]:
        return {
            'kind': 'plant-validation',
            'ok': self.ok,
            'unreachable': list(self.unreachable),
            'not_input_enabled': [
                {'state': state, 'input': x.to_json()}
                for state, x in self.not_input_enabled
            ],
            'partition_violations': list(self.partition_violations),
        }


@dataclass(frozen=True)
class SpecValidationReport:
    """Outcome of validate_spec."""

    missing: Tuple[Tuple[str, InputEvent], ...]
    unreachable: Tuple[str, ...]
    blocking: Tuple[str, ...]
    empty: bool

    @property
    def ok(self) -> bool:
        """Input-complete and non-empty; unreachable and blocking states are informational."""
        return not self.missing and not self.empty

    def to_document(self) -> Dict[str, Any]:
        return {
            'kind': 'spec-validation',
            'ok': self.ok,
            'missing': [{'state': state, 'input': x.to_json()} for state, x in self.missing],
            'unreachable': list(self.unreachable),
            'blocking': list(self.blocking),
            'empty': self.empty,
        }


def partition_violations(
    input_alphabet: Iterable[str],
    output_alphabet: Iterable[str],
    controllable: Iterable[str],
    uncontrollable: Iterable[str],
    states: Iterable[str]
) -> List[str]:
    """
    Messages for every name shared between two name spaces.

    Controllable and uncontrollable events must be disjoint, and input
    symbols, output symbols, internal events and states must not share
    names.
    """
    spaces = [
        ('input symbol', set(input_alphabet)),
        ('output symbol', set(output_alphabet)),
        ('controllable event', set(controllable)),
        ('uncontrollable event', set(uncontrollable)),
        ('state', set(states)),
    ]
    messages = []
    for i, (first_kind, first) in enumerate(spaces):
        for second_kind, second in spaces[i + 1:]:
            for name in sorted(first & second):
                messages.append(f"{name!r} is both {first_kind} and {second_kind}")
    return messages


def plant_reachable(plant: OpenDes) -> Set[str]:
    successors: Dict[str, Set[str]] = {}
    for (source, _, _), (_, target) in plant.transitions.items():
        successors.setdefault(source, set()).add(target)

    seen = {plant.initial}
    queue = deque([plant.initial])
    while queue:
        state = queue.popleft()
        for target in successors.get(state, ()):
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return seen


def validate_plant(plant: OpenDes) -> ValidationReport:
    """
    Check reachability, input-enabledness and name-space partitions.

    Args:
        plant: Parsed plant

    Returns:
        ValidationReport listing every violation in canonical order
    """
    reachable = plant_reachable(plant)
    unreachable = tuple(state for state in plant.states if state not in reachable)
    not_enabled = tuple(
        (state, x)
        for state in plant.states
        for x in plant.input_events
        if not plant.moves(state, x)
    )
    violations = tuple(partition_violations(
        plant.input_alphabet,
        plant.output_alphabet,
        plant.controllable,
        plant.uncontrollable,
        plant.states,
    ))
    report = ValidationReport(unreachable, not_enabled, violations)
    logger.debug(
        f"Validated plant: {len(unreachable)} unreachable, "
        f"{len(not_enabled)} not input-enabled, {len(violations)} partition violations"
    )
    return report


def complete_inputs(plant: OpenDes) -> OpenDes:
    """
    Add stutter self-loops wherever a declared input has no transition.

    Every added transition is (q, x, stutter) -> (silent, q); existing
    transitions are untouched, so completing twice changes nothing.

    Returns:
        The same plant when it is already input-enabled, else a new plant
    """
    added = {
        (state, x, STUTTER): (SILENT_OUTPUT, state)
        for state in plant.states
        for x in plant.input_events
        if not plant.moves(state, x)
    }
    if not added:
        return plant

    logger.info(f"Completed plant with {len(added)} stutter transitions")
    transitions = dict(plant.transitions)
    transitions.update(added)
    return OpenDes(
        states=plant.states,
        initial=plant.initial,
        marked=plant.marked,
        input_alphabet=plant.input_alphabet,
        output_alphabet=plant.output_alphabet,
        input_events=plant.input_events,
        controllable=plant.controllable,
        uncontrollable=plant.uncontrollable,
        transitions=transitions,
    )


def validate_spec(
    spec: SpecTransducer,
    input_events: Iterable[InputEvent] = ()
) -> SpecValidationReport:
    """
    Check a specification against the plant's declared input events.

    Args:
        spec: Parsed transducer
        input_events: Declared Σ_x; defaults to the inputs the transducer mentions

    Returns:
        SpecValidationReport
    """
    events = sorted(set(input_events), key=canonical_key) or list(spec.input_events)
    reachable = spec.reachable()
    coaccessible = spec.coaccessible()
    return SpecValidationReport(
        missing=tuple(spec.missing_inputs(events)),
        unreachable=tuple(state for state in spec.states if state not in reachable),
        blocking=tuple(state for state in spec.states if state not in coaccessible),
        empty=spec.is_empty(),
    )
