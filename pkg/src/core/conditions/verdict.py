"""Verdict value object shared by condition and verification checks."""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from core.lang.words import format_word

EXACT = 'automaton-exact'
BOUNDED = 'bounded-enumeration'
LITERAL = 'literal'
LOCAL = 'local'
MODES = (LITERAL, LOCAL)


@dataclass(frozen=True)
class CheckVerdict:
    """
    Result of a language check.

    Args:
        holds: Whether the checked property holds
        witness: Counterexample word, present iff holds is False
        method: automaton-exact or bounded-enumeration
        mode: literal or local for controllability checks
        cross_check: Bounded verdict computed alongside an exact one

    Raises:
        ValueError: If the witness does not match holds
    """

    holds: bool
    witness: Optional[Tuple[Any, ...]] = None
    method: str = EXACT
    mode: Optional[str] = None
    cross_check: Optional['CheckVerdict'] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("A verdict carries a witness iff it fails")
        if self.method not in (EXACT, BOUNDED):
            raise ValueError(f"Invalid verdict method: {self.method}")
        if self.mode is not None and self.mode not in MODES:
            raise ValueError(f"Invalid controllability mode: {self.mode}")

    @property
    def agrees(self) -> bool:
        """False only when a bounded cross-check found a witness the exact check missed."""
        if self.cross_check is None:
            return True
        return self.cross_check.holds or not self.holds

    def to_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            'holds': self.holds,
            'method': self.method,
        }
        if self.mode is not None:
            document['mode'] = self.mode
        document['witness'] = None if self.witness is None else format_word(self.witness)
        if self.cross_check is not None:
            document['bounded'] = self.cross_check.to_document()
        return document
