"""
Words over open DES events and their projections.

An extended word is a tuple of (input, internal, output) steps; an I/O word
keeps (input, output) pairs and an xp-word keeps (input, internal) pairs.
Silent events still occupy a position in the pair projections.
"""

from typing import Any, Iterable, Tuple

from core.des.events import EPS, InputEvent, InternalEvent, OutputEvent

ExtendedStep = Tuple[InputEvent, InternalEvent, OutputEvent]
ExtendedWord = Tuple[ExtendedStep, ...]
IoWord = Tuple[Tuple[InputEvent, OutputEvent], ...]
XpWord = Tuple[Tuple[InputEvent, InternalEvent], ...]

AXES = ('x', 'y', 'xp', 'xy')


def project(word: ExtendedWord, axis: str) -> Tuple[Any, ...]:
    """
    Project an extended word onto one or two of its tracks.

    Args:
        word: Extended word
        axis: 'x', 'y', 'xp' or 'xy'

    Returns:
        For 'xp' and 'xy' a pair word of the same length; for 'x' and 'y'
        the concatenation of the non-silent components

    Raises:
        ValueError: If the axis is unknown

    Example:
        project(((x1, s1, y1), (x1, su, y2)), 'xy')  # ((x1, y1), (x1, y2))
    """
    if axis == 'xy':
        return tuple((x, y) for x, _, y in word)
    if axis == 'xp':
        return tuple((x, event) for x, event, _ in word)
    if axis == 'x':
        return tuple(x for x, _, _ in word if not x.is_silent)
    if axis == 'y':
        return tuple(y for _, _, y in word if not y.is_silent)
    raise ValueError(f"Invalid projection axis: {axis}")


def _label(item: Any) -> str:
    if isinstance(item, tuple):
        return '(' + '|'.join(_label(part) for part in item) + ')'
    return getattr(item, 'label', str(item))


def format_word(word: Iterable[Any]) -> str:
    """
    Render a word for CLI output.

    Pair and triple steps print as ``(a|b|c)`` and are concatenated; single
    events are joined by spaces; the empty word prints as ``eps``.
    """
    steps = tuple(word)
    if not steps:
        return EPS
    if isinstance(steps[0], tuple):
        return ''.join(_label(step) for step in steps)
    return ' '.join(_label(step) for step in steps)
