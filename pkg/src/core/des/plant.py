"""
Open discrete event system plant model.

A plant reads an input event, executes an internal event and emits an
output event. Transitions are keyed by (state, input, internal event) and
carry their own output label.

Example:
    plant = load_model('two_input_plant.json')
    for move in plant.enabled_moves('q0', InputEvent.of('x1')):
        print(move.event, move.output, move.target)
"""

import hashlib
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, NamedTuple, Tuple

from core.errors import ModelError
from .events import STUTTER, InputEvent, InternalEvent, OutputEvent, canonical_key

TransitionKey = Tuple[str, InputEvent, InternalEvent]


class Move(NamedTuple):
    """One enabled plant transition under a given state and input."""

    event: InternalEvent
    output: OutputEvent
    target: str


@dataclass(frozen=True)
class OpenDes:
    """
    Immutable open DES plant.

    Args:
        states: State identifiers Q_p
        initial: Initial state q_p0
        marked: Marked states Q_pm
        input_alphabet: Input symbols X
        output_alphabet: Output symbols Y
        input_events: Declared environment moves Σ_x
        controllable: Names of Σ_c
        uncontrollable: Names of Σ_uc
        transitions: (state, input, event) -> (output, target)

    Example:
        plant.enabled_moves('q1', InputEvent.of('x1'))
    """

    states: Tuple[str, ...]
    initial: str
    marked: FrozenSet[str]
    input_alphabet: FrozenSet[str]
    output_alphabet: FrozenSet[str]
    input_events: Tuple[InputEvent, ...]
    controllable: FrozenSet[str]
    uncontrollable: FrozenSet[str]
    transitions: Mapping[TransitionKey, Tuple[OutputEvent, str]]
    _moves: Dict[Tuple[str, InputEvent], Tuple[Move, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(sorted(self.states)))
        object.__setattr__(self, 'marked', frozenset(self.marked))
        object.__setattr__(self, 'input_alphabet', frozenset(self.input_alphabet))
        object.__setattr__(self, 'output_alphabet', frozenset(self.output_alphabet))
        object.__setattr__(self, 'controllable', frozenset(self.controllable))
        object.__setattr__(self, 'uncontrollable', frozenset(self.uncontrollable))
        object.__setattr__(
            self, 'input_events', tuple(sorted(set(self.input_events), key=canonical_key))
        )
        object.__setattr__(self, 'transitions', dict(self.transitions))

        grouped: Dict[Tuple[str, InputEvent], List[Move]] = {}
        for (state, x, event), (output, target) in self.transitions.items():
            grouped.setdefault((state, x), []).append(Move(event, output, target))
        moves = {
            key: tuple(sorted(entries, key=canonical_key))
            for key, entries in grouped.items()
        }
        object.__setattr__(self, '_moves', moves)

    __hash__ = None

    @property
    def internal_events(self) -> Tuple[InternalEvent, ...]:
        """Declared Σ_p in canonical order."""
        events = [InternalEvent(name, controllable=True) for name in self.controllable]
        events += [InternalEvent(name) for name in self.uncontrollable]
        return tuple(sorted(events, key=canonical_key))

    def event(self, name: str) -> InternalEvent:
        """
        Look up an internal event by name.

        Raises:
            ModelError: If the name is not declared
        """
        if name == STUTTER.name:
            return STUTTER
        if name in self.controllable:
            return InternalEvent(name, controllable=True)
        if name in self.uncontrollable:
            return InternalEvent(name)
        raise ModelError(f"Undeclared internal event: {name}")

    def enabled_moves(self, state: str, x: InputEvent) -> Tuple[Move, ...]:
        """
        Transitions keyed by (state, x), in canonical order.

        Args:
            state: Plant state
            x: Declared input event

        Returns:
            Tuple of moves, empty when δ_p is undefined for every event

        Raises:
            ModelError: If the state or the input event is unknown
        """
        if state not in self.states:
            raise ModelError(f"Unknown state: {state}")
        if x not in self.input_events:
            raise ModelError(f"Undeclared input event: {x.label}")
        return self._moves.get((state, x), ())

    def moves(self, state: str, x: InputEvent) -> Tuple[Move, ...]:
        """Unchecked variant of enabled_moves for hot loops."""
        return self._moves.get((state, x), ())

    def fingerprint(self) -> str:
        """SHA-256 of the canonical model text."""
        from .printer import print_model

        return hashlib.sha256(print_model(self).encode('utf-8')).hexdigest()
