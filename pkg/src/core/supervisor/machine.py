"""
Finite-memory realization of a winning strategy.

Memory states are the strategy-reachable environment nodes of the arena,
named m0, m1, ... in breadth-first discovery order.

Example:
    solution = solve(arena)
    strategy = extract_strategy(arena, solution.winning)
    supervisor = realize_supervisor(arena, strategy)
    supervisor.pattern_of[('m0', InputEvent.of('x1'))]
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from core.des.events import BOTTOM, InputEvent, InternalEvent
from core.des.plant import OpenDes
from core.errors import StrategyError
from core.game.arena import EnvNode, GameArena, PlantNode, SupNode
from core.game.patterns import ControlPattern
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SupervisorMachine:
    """
    Reactive supervisor S as a Mealy-style machine.

    Args:
        states: Memory state names
        initial: Initial memory
        pattern_of: (memory, input) -> pattern
        update: (memory, input, internal event) -> memory
        marked: Memories whose plant and spec components are both marked
        plant_fingerprint: Fingerprint of the plant the supervisor controls
        nodes: Arena environment node behind each memory, when known
    """

    states: Tuple[str, ...]
    initial: str
    pattern_of: Mapping[Tuple[str, InputEvent], ControlPattern]
    update: Mapping[Tuple[str, InputEvent, InternalEvent], str]
    marked: FrozenSet[str]
    plant_fingerprint: str
    nodes: Optional[Mapping[str, EnvNode]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(sorted(self.states)))
        object.__setattr__(self, 'marked', frozenset(self.marked))
        object.__setattr__(self, 'pattern_of', dict(self.pattern_of))
        object.__setattr__(self, 'update', dict(self.update))

    __hash__ = None

    def pattern(self, memory: str, x: InputEvent) -> Optional[ControlPattern]:
        return self.pattern_of.get((memory, x))

    def next_memory(self, memory: str, x: InputEvent, event: InternalEvent) -> Optional[str]:
        return self.update.get((memory, x, event))


def realize_supervisor(arena: GameArena, strategy: Mapping[SupNode, ControlPattern]) -> SupervisorMachine:
    """
    Build the supervisor machine for a strategy.

    Args:
        arena: Arena the strategy was extracted from (with its plant)
        strategy: Positional strategy over V_s

    Returns:
        SupervisorMachine total on every strategy-reachable history

    Raises:
        StrategyError: If a reachable V_s node has no strategy entry or a
            strategy-reachable node is losing
    """
    plant = arena.plant
    if plant is None:
        raise StrategyError("Arena carries no plant")

    names: Dict[EnvNode, str] = {arena.initial: 'm0'}
    queue = deque([arena.initial])
    pattern_of = {}
    update = {}
    while queue:
        env = queue.popleft()
        if env.spec_state == BOTTOM:
            logger.error(f"Strategy reaches losing node {env}")
            raise StrategyError(f"Strategy reaches losing node ({env.plant_state}, ⊥)")
        memory = names[env]
        for x in plant.input_events:
            sup = SupNode(env, x)
            if sup not in strategy:
                logger.error(f"Strategy undefined at reachable node {sup}")
                raise StrategyError(
                    f"Strategy undefined at ({env.plant_state}, {env.spec_state}) under {x.label}"
                )
            pattern = strategy[sup]
            pattern_of[(memory, x)] = pattern
            for event, target in arena.successors(PlantNode(env, x, pattern)):
                if target not in names:
                    names[target] = f"m{len(names)}"
                    queue.append(target)
                update[(memory, x, event)] = names[target]

    marked = frozenset(names[env] for env in names if env in arena.marked)
    nodes = {name: env for env, name in names.items()}
    supervisor = SupervisorMachine(
        states=tuple(names.values()),
        initial='m0',
        pattern_of=pattern_of,
        update=update,
        marked=marked,
        plant_fingerprint=plant.fingerprint(),
        nodes=nodes,
    )
    logger.info(f"Realized supervisor with {len(names)} memory states")
    return supervisor


def permissive_supervisor(plant: OpenDes) -> SupervisorMachine:
    """
    Single-memory supervisor enabling Σ_p everywhere.

    Its closed loop generates exactly the plant's language.
    """
    pattern = ControlPattern(plant.controllable | plant.uncontrollable)
    pattern_of = {('m0', x): pattern for x in plant.input_events}
    update = {
        ('m0', x, event): 'm0'
        for (_, x, event) in plant.transitions
    }
    return SupervisorMachine(
        states=('m0',),
        initial='m0',
        pattern_of=pattern_of,
        update=update,
        marked=frozenset({'m0'}),
        plant_fingerprint=plant.fingerprint(),
    )
