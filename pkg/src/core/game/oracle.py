"""
Brute-force strategy-enumeration oracle for the fixpoint solver.

Every positional supervisor strategy is tried in turn. Under a fixed
strategy each supervisor node keeps one edge, and a node is won when every
node it can reach avoids V_⊥ and deadlocks and can itself still reach a
marked environment node. W is the union over all strategies.

Patterns that give a plant node the same successors are interchangeable, so
only one representative per successor set is enumerated.
"""

import itertools
import math
from typing import Dict, FrozenSet, Hashable, List, Optional, Set

from config import SYNTHESIS_CONFIG
from core.errors import ResourceLimitError
from utils.logger import get_logger
from .arena import PLANT, SUP, GameArena

logger = get_logger(__name__)


def _choices(
    sup: Hashable,
    succ: Dict[Hashable, List[Hashable]],
    bad: Set[Hashable]
) -> List[Optional[Hashable]]:
    """One plant node per distinct successor set; doomed ones only if nothing else is left."""
    seen = set()
    viable, doomed = [], []
    for target in succ[sup]:
        behaviour = frozenset(succ[target])
        if behaviour in seen:
            continue
        seen.add(behaviour)
        if target in bad or any(t in bad for t in succ[target]):
            doomed.append(target)
        else:
            viable.append(target)
    return viable or doomed[:1] or [None]


def _won_under(
    choice: Dict[Hashable, Optional[Hashable]],
    succ: Dict[Hashable, List[Hashable]],
    bad: Set[Hashable],
    marked: FrozenSet[Hashable]
) -> Set[Hashable]:
    edges = {
        node: ([] if choice[node] is None else [choice[node]]) if node in choice else targets
        for node, targets in succ.items()
    }
    preds: Dict[Hashable, List[Hashable]] = {node: [] for node in edges}
    for node, targets in edges.items():
        for target in targets:
            preds[target].append(node)

    def backward(start: Set[Hashable]) -> Set[Hashable]:
        found = set(start)
        stack = list(start)
        while stack:
            for pred in preds[stack.pop()]:
                if pred not in found:
                    found.add(pred)
                    stack.append(pred)
        return found

    live = backward({node for node in marked if node in edges})
    stuck = {node for node in choice if choice[node] is None}
    losers = backward((set(edges) - live) | bad | stuck)
    return set(edges) - losers


def brute_force_solve(arena: GameArena) -> FrozenSet[Hashable]:
    """
    Winning and live nodes by enumerating positional strategies.

    Args:
        arena: Arena with at most SYNTHESIS_CONFIG['oracle_max_nodes'] nodes
            and at most SYNTHESIS_CONFIG['oracle_max_strategies'] distinct
            positional strategies

    Returns:
        Node set W

    Raises:
        ResourceLimitError: If the arena or its strategy space exceeds a cap
    """
    nodes = list(arena.graph)
    cap = SYNTHESIS_CONFIG['oracle_max_nodes']
    if len(nodes) > cap:
        raise ResourceLimitError(f"Arena of {len(nodes)} nodes exceeds the oracle cap of {cap}")

    succ: Dict[Hashable, List[Hashable]] = {
        node: list(dict.fromkeys(target for _, target in arena.successors(node)))
        for node in nodes
    }
    bad = set(arena.losing) | {
        node for node in nodes if arena.player(node) == PLANT and not succ[node]
    }
    sups = arena.nodes_of(SUP)
    options = [_choices(sup, succ, bad) for sup in sups]

    count = math.prod(len(option) for option in options)
    limit = SYNTHESIS_CONFIG['oracle_max_strategies']
    if count > limit:
        raise ResourceLimitError(f"{count} positional strategies exceed the oracle cap of {limit}")

    winning: Set[Hashable] = set()
    for picked in itertools.product(*options):
        winning |= _won_under(dict(zip(sups, picked)), succ, bad, arena.marked)

    logger.debug(f"Oracle tried {count} strategies and found {len(winning)} winning nodes")
    return frozenset(winning)
