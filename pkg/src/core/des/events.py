"""
Event types of open discrete event systems.

Input and output events are finite sets of alphabet symbols; the empty set
is the silent event (printed ``eps``). Internal events are named plant
transitions, either controllable or uncontrollable, plus the distinguished
stutter event added by input completion.

Example:
    x = InputEvent.of('x1', 'x2')
    print(x.label)            # {x1,x2}
    print(SILENT_OUTPUT.label) # eps
"""

import re
from dataclasses import dataclass
from typing import Any, FrozenSet, Iterable, Tuple

EPS = 'eps'
BOTTOM = '⊥'
RESERVED = frozenset({EPS, BOTTOM})
IDENTIFIER = re.compile(r'^[^\s{},|()"@+]+$')


@dataclass(frozen=True)
class _SetEvent:
    """Common behaviour of input and output events."""

    symbols: FrozenSet[str] = frozenset()

    @classmethod
    def of(cls, *names: str):
        return cls(frozenset(names))

    @property
    def is_silent(self) -> bool:
        return not self.symbols

    @property
    def label(self) -> str:
        if self.is_silent:
            return EPS
        return '{' + ','.join(sorted(self.symbols)) + '}'

    @property
    def sort_key(self) -> Tuple[str, ...]:
        return tuple(sorted(self.symbols))

    def to_json(self) -> Any:
        """Model-file form: a sorted name list, or "eps" when silent."""
        return EPS if self.is_silent else sorted(self.symbols)

    def __str__(self) -> str:
        return self.label


class InputEvent(_SetEvent):
    """An element of Σ_x: a non-empty subset of X, or silent."""


class OutputEvent(_SetEvent):
    """An element of Σ_y: a non-empty subset of Y, or silent."""


SILENT_INPUT = InputEvent()
SILENT_OUTPUT = OutputEvent()


@dataclass(frozen=True)
class InternalEvent:
    """
    A plant event of Σ_p, or the stutter event.

    Stutter is never declared by users, is classified uncontrollable and is
    therefore part of every control pattern.
    """

    name: str
    controllable: bool = False
    stutter: bool = False

    @property
    def label(self) -> str:
        return EPS if self.stutter else self.name

    @property
    def sort_key(self) -> Tuple[int, str]:
        return (0, '') if self.stutter else (1, self.name)

    def __str__(self) -> str:
        return self.label


STUTTER = InternalEvent(EPS, controllable=False, stutter=True)


def canonical_key(item: Any) -> Any:
    """
    Sort key for events, tuples of events and plain values.

    Gives the canonical name order used for every enumeration, witness
    search and printed listing.
    """
    if hasattr(item, 'sort_key'):
        return item.sort_key
    if isinstance(item, tuple):
        return tuple(canonical_key(part) for part in item)
    return item


def word_key(word: Iterable[Any]) -> Tuple[int, Any]:
    """Shortest-first, then canonical, ordering of words."""
    steps = tuple(word)
    return len(steps), canonical_key(steps)


def _parse_label(label: str) -> FrozenSet[str]:
    text = label.strip()
    if text == EPS or text in ('{}', ''):
        return frozenset()
    if text.startswith('{') and text.endswith('}'):
        text = text[1:-1]
    names = [part.strip() for part in re.split(r'[,+]', text)]
    if any(not IDENTIFIER.match(name) for name in names):
        raise ValueError(f"Invalid event label: {label!r}")
    return frozenset(names)


def parse_input_label(label: str) -> InputEvent:
    """Parse ``{x1,x2}``, ``x1+x2``, ``x1`` or ``eps`` into an input event."""
    return InputEvent(_parse_label(label))


def parse_output_label(label: str) -> OutputEvent:
    """Parse an output label in the same syntax as parse_input_label."""
    return OutputEvent(_parse_label(label))
