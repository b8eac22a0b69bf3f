"""
Three-player game arena built from a plant and A_K.

Environment nodes are product states (plant state, spec state). The
environment picks an input, the supervisor picks a control pattern and the
plant picks an enabled internal event. Nodes whose spec component is ⊥ are
losing leaves and are not expanded.

Example:
    automaton = complete_to_safety_automaton(spec, plant.input_events)
    arena = build_arena(plant, automaton)
    print(arena.stats())
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Hashable, List, NamedTuple, Optional, Tuple

import networkx as nx

from config import max_arena_nodes
from core.des.events import BOTTOM, InputEvent, canonical_key
from core.des.plant import OpenDes
from core.errors import ResourceLimitError, SpecificationError
from utils.logger import get_logger
from .patterns import ControlPattern, control_patterns
from .safety import SafetyAutomaton

logger = get_logger(__name__)

ENV = 'env'
SUP = 'sup'
PLANT = 'plant'


class EnvNode(NamedTuple):
    plant_state: str
    spec_state: str


class SupNode(NamedTuple):
    env: EnvNode
    input: InputEvent


class PlantNode(NamedTuple):
    env: EnvNode
    input: InputEvent
    pattern: ControlPattern


@dataclass(frozen=True)
class GameArena:
    """
    Tripartite game graph.

    Args:
        graph: MultiDiGraph; node attribute 'player' is env, sup or plant and
            'order' is the discovery index; edges are keyed by their label
        initial: v_g0
        losing: V_⊥
        marked: Environment nodes marked in both plant and spec
        patterns: Θ in canonical order
        plant: Plant the arena was built from
        automaton: A_K the arena was built from
    """

    graph: nx.MultiDiGraph
    initial: EnvNode
    losing: FrozenSet[EnvNode]
    marked: FrozenSet[EnvNode]
    patterns: Tuple[ControlPattern, ...]
    plant: Optional[OpenDes] = None
    automaton: Optional[SafetyAutomaton] = None

    __hash__ = None

    def player(self, node: Hashable) -> str:
        return self.graph.nodes[node]['player']

    def nodes_of(self, player: str) -> List[Hashable]:
        """Nodes owned by a player in discovery order."""
        nodes = [n for n, owner in self.graph.nodes(data='player') if owner == player]
        return sorted(nodes, key=lambda n: self.graph.nodes[n]['order'])

    def successors(self, node: Hashable) -> List[Tuple[Any, Hashable]]:
        """(label, successor) pairs in canonical label order."""
        edges = [(label, target) for _, target, label in self.graph.out_edges(node, keys=True)]
        return sorted(edges, key=lambda edge: canonical_key(edge[0]))

    def stats(self) -> Dict[str, int]:
        return {
            'env_nodes': len(self.nodes_of(ENV)),
            'sup_nodes': len(self.nodes_of(SUP)),
            'plant_nodes': len(self.nodes_of(PLANT)),
            'edges': self.graph.number_of_edges(),
            'losing': len(self.losing),
            'marked': len(self.marked),
        }


def build_arena(plant: OpenDes, automaton: SafetyAutomaton) -> GameArena:
    """
    Explore the arena forward from v_g0 = (q_p0, q_k0).

    Args:
        plant: Completed plant
        automaton: A_K

    Returns:
        GameArena over reachable nodes only

    Raises:
        SpecificationError: If A_K is undefined for a declared input
        ResourceLimitError: If the node count exceeds max_arena_nodes()
    """
    missing = automaton.spec.missing_inputs(plant.input_events)
    if missing:
        state, x = missing[0]
        raise SpecificationError(
            f"Specification is not input-complete: no transition for ({state}, {x.label})"
        )

    patterns = tuple(control_patterns(plant))
    cap = max_arena_nodes()
    graph = nx.MultiDiGraph()

    def add_node(node: Hashable, player: str) -> bool:
        if node in graph:
            return False
        if graph.number_of_nodes() >= cap:
            logger.error(f"Arena exceeded the node cap of {cap}")
            raise ResourceLimitError(f"Arena exceeds the node cap of {cap} (set RDES_MAX_NODES)")
        graph.add_node(node, player=player, order=graph.number_of_nodes())
        return True

    initial = EnvNode(plant.initial, automaton.initial)
    add_node(initial, ENV)
    queue = deque([initial])
    while queue:
        env = queue.popleft()
        if env.spec_state == BOTTOM:
            continue
        for x in plant.input_events:
            sup = SupNode(env, x)
            add_node(sup, SUP)
            graph.add_edge(env, sup, key=x)
            for pattern in patterns:
                node = PlantNode(env, x, pattern)
                add_node(node, PLANT)
                graph.add_edge(sup, node, key=pattern)
                for move in plant.moves(env.plant_state, x):
                    if not pattern.allows(move.event):
                        continue
                    spec_state = automaton.step(env.spec_state, x, move.output)
                    target = EnvNode(move.target, spec_state)
                    if add_node(target, ENV):
                        queue.append(target)
                    graph.add_edge(node, target, key=move.event)

    envs = [n for n, owner in graph.nodes(data='player') if owner == ENV]
    arena = GameArena(
        graph=graph,
        initial=initial,
        losing=frozenset(n for n in envs if n.spec_state == BOTTOM),
        marked=frozenset(
            n for n in envs
            if n.plant_state in plant.marked and n.spec_state in automaton.marked
        ),
        patterns=patterns,
        plant=plant,
        automaton=automaton,
    )
    logger.info(f"Built arena: {arena.stats()}")
    return arena
