"""Positional supervisor strategies over a solved arena."""

from typing import AbstractSet, Dict, Hashable

from core.errors import StrategyError
from utils.logger import get_logger
from .arena import SUP, GameArena, PlantNode, SupNode
from .patterns import ControlPattern

logger = get_logger(__name__)


def choose_patterns(arena: GameArena, winning: AbstractSet[Hashable]) -> Dict[SupNode, ControlPattern]:
    """
    Pick the first winning pattern in Θ order at every winning V_s node.

    Θ is ordered largest first, and the union of two winning patterns is
    winning, so the first hit is the maximal winning pattern.
    """
    strategy = {}
    for sup in arena.nodes_of(SUP):
        if sup not in winning:
            continue
        for pattern in arena.patterns:
            if PlantNode(sup.env, sup.input, pattern) in winning:
                strategy[sup] = pattern
                break
    return strategy


def extract_strategy(arena: GameArena, winning: AbstractSet[Hashable]) -> Dict[SupNode, ControlPattern]:
    """
    Positional strategy on the winning region.

    Args:
        arena: Game arena
        winning: Winning node set from solve

    Returns:
        Map from every winning V_s node to its chosen pattern

    Raises:
        StrategyError: If v_g0 is not winning
    """
    if arena.initial not in winning:
        logger.error("Strategy requested for a losing initial node")
        raise StrategyError("Initial node is not winning; no strategy exists")
    return choose_patterns(arena, winning)
