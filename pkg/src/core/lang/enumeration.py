"""
Bounded enumeration of extended and input-output languages.

Example:
    words = enumerate_extended(plant, depth=2)
    io_words = io_language(plant, depth=2, marked_only=True)
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from config import SYNTHESIS_CONFIG
from core.des.events import word_key
from core.des.plant import OpenDes
from core.errors import ResourceLimitError
from utils.logger import get_logger
from .words import ExtendedWord, IoWord, project

logger = get_logger(__name__)


def check_depth(depth: int) -> None:
    """
    Raises:
        ValueError: If depth is negative
        ResourceLimitError: If depth exceeds the configured enumeration cap
    """
    if depth < 0:
        raise ValueError(f"Invalid depth: {depth}")
    cap = SYNTHESIS_CONFIG['max_depth']
    if depth > cap:
        raise ResourceLimitError(f"Depth {depth} exceeds the enumeration cap of {cap}")


def runs(plant: OpenDes, depth: int) -> List[Tuple[ExtendedWord, str]]:
    """
    Every (word, final state) pair of length at most depth, breadth-first.

    Runs are unique per word because δ_p is deterministic per
    (state, input, internal) key.
    """
    check_depth(depth)
    layer: List[Tuple[ExtendedWord, str]] = [((), plant.initial)]
    result = list(layer)
    for _ in range(depth):
        following = []
        for word, state in layer:
            for x in plant.input_events:
                for move in plant.moves(state, x):
                    following.append((word + ((x, move.event, move.output),), move.target))
        following.sort(key=lambda run: word_key(run[0]))
        result.extend(following)
        layer = following
    return result


def enumerate_extended(
    plant: OpenDes,
    depth: int,
    marked_only: bool = False,
    accepting: Optional[Iterable[str]] = None
) -> Tuple[ExtendedWord, ...]:
    """
    Words of L_e(P), or of L_e,m(P), up to the given length.

    Args:
        plant: Plant (completed for the full language)
        depth: Maximum word length
        marked_only: Keep only words whose run ends in an accepting state
        accepting: Accepting states; defaults to the plant's marking

    Returns:
        Words ordered shortest first, then by canonical event names

    Raises:
        ResourceLimitError: If depth exceeds the configured cap
    """
    final: FrozenSet[str] = frozenset(plant.marked if accepting is None else accepting)
    words = tuple(
        word for word, state in runs(plant, depth)
        if not marked_only or state in final
    )
    logger.debug(f"Enumerated {len(words)} extended words up to depth {depth}")
    return words


def io_language(
    plant: OpenDes,
    depth: int,
    marked_only: bool = False,
    accepting: Optional[Iterable[str]] = None
) -> Tuple[IoWord, ...]:
    """xy-projection of enumerate_extended with duplicates merged."""
    words = {
        project(word, 'xy')
        for word in enumerate_extended(plant, depth, marked_only, accepting)
    }
    return tuple(sorted(words, key=word_key))


def io_reach(plant: OpenDes, depth: int) -> Dict[IoWord, Set[str]]:
    """Map every I/O word up to depth to the plant states it can end in."""
    reach: Dict[IoWord, Set[str]] = {}
    for word, state in runs(plant, depth):
        reach.setdefault(project(word, 'xy'), set()).add(state)
    return reach


def prefix_closure(words: Iterable[tuple]) -> FrozenSet[tuple]:
    """All prefixes of the given words, the empty word included."""
    closure: Set[tuple] = {()}
    for word in words:
        word = tuple(word)
        for length in range(len(word) + 1):
            closure.add(word[:length])
    return frozenset(closure)


def is_prefix_closed(words: Iterable[tuple]) -> bool:
    """True iff the set equals its prefix closure."""
    language = {tuple(word) for word in words}
    if not language:
        return True
    return language == prefix_closure(language)
