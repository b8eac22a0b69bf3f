"""
Deterministic Mealy specification transducer.

The transducer reads one input event per step and answers with one output
event; its marked language is the reactive specification K.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from .events import InputEvent, OutputEvent, canonical_key


@dataclass(frozen=True)
class SpecTransducer:
    """
    Immutable Mealy transducer (Q_k, q_k0, δ_k, γ_k, Q_km).

    Args:
        states: State identifiers Q_k
        initial: Initial state q_k0
        marked: Marked states Q_km
        transitions: (state, input) -> (output, target)
    """

    states: Tuple[str, ...]
    initial: str
    marked: FrozenSet[str]
    transitions: Mapping[Tuple[str, InputEvent], Tuple[OutputEvent, str]]

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(sorted(self.states)))
        object.__setattr__(self, 'marked', frozenset(self.marked))
        object.__setattr__(self, 'transitions', dict(self.transitions))

    __hash__ = None

    def step(self, state: str, x: InputEvent) -> Optional[Tuple[OutputEvent, str]]:
        """Output and successor of (state, x), or None when undefined."""
        return self.transitions.get((state, x))

    @property
    def input_events(self) -> Tuple[InputEvent, ...]:
        """Input events the transducer mentions, in canonical order."""
        events = {x for _, x in self.transitions}
        return tuple(sorted(events, key=canonical_key))

    def missing_inputs(
        self,
        input_events: Iterable[InputEvent]
    ) -> List[Tuple[str, InputEvent]]:
        """
        Keys where δ_k is undefined.

        Args:
            input_events: The plant's declared Σ_x

        Returns:
            Sorted list of (state, input) pairs, empty iff input-complete
        """
        events = sorted(set(input_events), key=canonical_key)
        return [
            (state, x)
            for state in self.states
            for x in events
            if (state, x) not in self.transitions
        ]

    def reachable(self) -> Set[str]:
        seen = {self.initial}
        frontier = [self.initial]
        while frontier:
            state = frontier.pop()
            for (source, _), (_, target) in self.transitions.items():
                if source == state and target not in seen:
                    seen.add(target)
                    frontier.append(target)
        return seen

    def coaccessible(self) -> Set[str]:
        """States from which a marked state can be reached."""
        found = set(self.marked)
        changed = True
        while changed:
            changed = False
            for (source, _), (_, target) in self.transitions.items():
                if target in found and source not in found:
                    found.add(source)
                    changed = True
        return found

    def is_empty(self) -> bool:
        """True iff the marked language K is empty."""
        return not (self.reachable() & set(self.marked))
