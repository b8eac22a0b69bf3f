"""
Safety and liveness fixpoint solver.

The supervisor owns V_s; the environment and the plant form a coalition.
Each round removes the coalition attractor of the non-winning and
deadlocked nodes, then keeps only nodes that can still reach a marked
environment node inside the safe region. Rounds repeat until nothing
changes.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Set

from utils.logger import get_logger
from .arena import PLANT, SUP, GameArena, SupNode
from .patterns import ControlPattern
from .strategy import choose_patterns

logger = get_logger(__name__)


@dataclass(frozen=True)
class GameSolution:
    """Winning region W, positional strategy and the realizability verdict."""

    winning: FrozenSet[Hashable]
    strategy: Dict[SupNode, ControlPattern] = field(compare=False)
    realizable: bool
    iterations: int = 0

    __hash__ = None

    def to_document(self, arena: GameArena) -> Dict[str, object]:
        document = dict(arena.stats())
        document['winning'] = len(self.winning)
        document['realizable'] = self.realizable
        return document


def _attractor(arena: GameArena, targets: Set[Hashable]) -> Set[Hashable]:
    """Nodes from which environment and plant can force a visit to targets."""
    graph = arena.graph
    remaining = {node: len(set(graph.successors(node))) for node in graph}
    attracted = set(targets)
    queue = deque(targets)
    while queue:
        node = queue.popleft()
        for pred in graph.predecessors(node):
            if pred in attracted:
                continue
            if arena.player(pred) == SUP:
                remaining[pred] -= 1
                if remaining[pred] > 0:
                    continue
            attracted.add(pred)
            queue.append(pred)
    return attracted


def _live(arena: GameArena, safe: Set[Hashable]) -> Set[Hashable]:
    """Safe nodes with a path inside safe to a marked environment node."""
    graph = arena.graph
    live = {node for node in arena.marked if node in safe}
    queue = deque(live)
    while queue:
        node = queue.popleft()
        for pred in graph.predecessors(node):
            if pred in safe and pred not in live:
                live.add(pred)
                queue.append(pred)
    return live


def solve(arena: GameArena) -> GameSolution:
    """
    Compute the supervisor's safe and live winning region.

    Args:
        arena: Built arena

    Returns:
        GameSolution; realizable iff v_g0 is winning
    """
    graph = arena.graph
    deadlocked = {
        node for node in graph
        if arena.player(node) == PLANT and graph.out_degree(node) == 0
    }
    region = set(graph) - arena.losing
    iterations = 0
    while True:
        iterations += 1
        targets = (set(graph) - region) | deadlocked
        safe = set(graph) - _attractor(arena, targets)
        live = _live(arena, safe)
        logger.debug(f"Solver round {iterations}: safe={len(safe)} live={len(live)}")
        if live == region:
            break
        region = live

    winning = frozenset(region)
    solution = GameSolution(
        winning=winning,
        strategy=choose_patterns(arena, winning),
        realizable=arena.initial in winning,
        iterations=iterations,
    )
    logger.info(
        f"Solved arena in {iterations} rounds: {len(winning)} winning nodes, "
        f"realizable={solution.realizable}"
    )
    return solution
