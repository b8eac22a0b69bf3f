"""
Control patterns: the event sets a supervisor may enable.

Every pattern contains all uncontrollable events, and the stutter event is
always allowed.
"""

import itertools
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from config import SYNTHESIS_CONFIG
from core.des.events import InternalEvent
from core.des.plant import OpenDes
from core.errors import ResourceLimitError
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ControlPattern:
    """A set θ of enabled internal event names."""

    enabled: FrozenSet[str]

    @classmethod
    def of(cls, *names: str) -> 'ControlPattern':
        return cls(frozenset(names))

    def allows(self, event: InternalEvent) -> bool:
        return event.stutter or event.name in self.enabled

    @property
    def label(self) -> str:
        return '{' + ','.join(sorted(self.enabled)) + '}'

    @property
    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        return (-len(self.enabled), tuple(sorted(self.enabled)))

    def __str__(self) -> str:
        return self.label


def control_patterns(plant: OpenDes) -> List[ControlPattern]:
    """
    Enumerate Θ for a plant.

    Args:
        plant: Plant whose Σ_c and Σ_uc define the patterns

    Returns:
        All 2^|Σ_c| patterns, largest first, then in canonical name order

    Raises:
        ResourceLimitError: If |Σ_c| exceeds the configured cap

    Example:
        control_patterns(plant)  # [{s1,s2,su}, {s1,su}, {s2,su}, {su}]
    """
    controllable = sorted(plant.controllable)
    cap = SYNTHESIS_CONFIG['max_controllable']
    if len(controllable) > cap:
        logger.error(f"{len(controllable)} controllable events exceed the cap of {cap}")
        raise ResourceLimitError(
            f"{len(controllable)} controllable events exceed the pattern cap of {cap}; "
            f"group events that are always enabled together"
        )

    patterns = []
    for size in range(len(controllable), -1, -1):
        for chosen in itertools.combinations(controllable, size):
            patterns.append(ControlPattern(frozenset(chosen) | plant.uncontrollable))
    return patterns
