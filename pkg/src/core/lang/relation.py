"""
Sequential input-output relation checks.

A plant respects the relation when every input word has some response (C1),
input and output tracks have equal length (C2) and the I/O language is
prefix-closed (C3).
"""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from core.des.events import InputEvent, OutputEvent, word_key
from core.des.plant import OpenDes
from utils.logger import get_logger
from .enumeration import check_depth, enumerate_extended, prefix_closure
from .words import format_word, project

logger = get_logger(__name__)


def track_lengths(word: Tuple[Any, ...]) -> Tuple[int, int]:
    """Count input and output symbols across the raw steps of a word."""
    symbols = [symbol for step in word for symbol in step]
    return (
        sum(isinstance(symbol, InputEvent) for symbol in symbols),
        sum(isinstance(symbol, OutputEvent) for symbol in symbols),
    )


def tracks_balanced(word: Tuple[Any, ...]) -> bool:
    """True iff the x-track and the y-track of word have the same length."""
    inputs, outputs = track_lengths(word)
    return inputs == outputs == len(word)


@dataclass(frozen=True)
class RelationReport:
    """Verdicts of the three relation conditions with the first failing word."""

    c1: bool
    c2: bool
    c3: bool
    witness: Optional[Tuple[Any, ...]] = None

    @property
    def holds(self) -> bool:
        return self.c1 and self.c2 and self.c3

    def to_document(self) -> Dict[str, Any]:
        return {
            'c1': self.c1,
            'c2': self.c2,
            'c3': self.c3,
            'witness': None if self.witness is None else format_word(self.witness),
        }


def check_sequential_relation(plant: OpenDes, depth: int) -> RelationReport:
    """
    Check C1, C2 and C3 over all input words up to depth.

    Input words are positional: a silent input event occupies one position,
    matching the step count of the extended words.

    Args:
        plant: Completed plant
        depth: Maximum input word length

    Returns:
        RelationReport; witness is the first failing word in canonical order
    """
    check_depth(depth)
    words = enumerate_extended(plant, depth)
    tracks = {tuple(x for x, _, _ in word) for word in words}

    c1_witness = None
    for length in range(depth + 1):
        for input_word in itertools.product(plant.input_events, repeat=length):
            if input_word not in tracks:
                c1_witness = input_word
                break
        if c1_witness is not None:
            break

    c2_witness = next((word for word in words if not tracks_balanced(word)), None)

    io_words = {project(word, 'xy') for word in words}
    missing = sorted(prefix_closure(io_words) - io_words, key=word_key)
    c3_witness = missing[0] if missing else None

    report = RelationReport(
        c1=c1_witness is None,
        c2=c2_witness is None,
        c3=c3_witness is None,
        witness=next(
            (w for w in (c1_witness, c2_witness, c3_witness) if w is not None),
            None,
        ),
    )
    logger.debug(f"Relation check at depth {depth}: c1={report.c1} c2={report.c2} c3={report.c3}")
    return report
