"""
Closed-loop composition S/P.

The closed loop is itself an OpenDes over states named ``q@m`` whose
transitions are the plant transitions allowed by the supervisor's pattern.
Its own marking is the plant marking; the product marking (plant and spec
both marked) is carried alongside.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Tuple

from core.des.events import InputEvent
from core.des.plant import OpenDes
from core.errors import ModelMismatchError
from core.game.patterns import ControlPattern
from utils.logger import get_logger
from .machine import SupervisorMachine

logger = get_logger(__name__)


def state_name(plant_state: str, memory: str) -> str:
    return f"{plant_state}@{memory}"


@dataclass(frozen=True)
class ClosedLoop:
    """
    Supervised plant.

    Args:
        machine: OpenDes generating L_e(S/P), marked by plant marking
        product_marked: States marked in both plant and spec
        patterns: (state, input) -> pattern the supervisor emits there
        components: state -> (plant state, memory)
        plant_fingerprint: Fingerprint of the controlled plant
    """

    machine: OpenDes
    product_marked: FrozenSet[str]
    patterns: Mapping[Tuple[str, InputEvent], ControlPattern]
    components: Mapping[str, Tuple[str, str]]
    plant_fingerprint: str

    __hash__ = None

    def blocked(self) -> List[Tuple[str, InputEvent]]:
        """(state, input) pairs where no transition survives the pattern."""
        return [
            (state, x)
            for state in self.machine.states
            for x in self.machine.input_events
            if not self.machine.moves(state, x)
        ]


def compose(plant: OpenDes, supervisor: SupervisorMachine) -> ClosedLoop:
    """
    Compose a supervisor with the plant it was built for.

    Args:
        plant: Completed plant
        supervisor: Supervisor machine

    Returns:
        ClosedLoop over the reachable (plant state, memory) pairs

    Raises:
        ModelMismatchError: If the supervisor belongs to another plant or
            lacks a pattern or update the plant needs
    """
    if supervisor.plant_fingerprint != plant.fingerprint():
        logger.error("Supervisor fingerprint does not match the plant")
        raise ModelMismatchError("Supervisor was synthesized for a different plant")

    start = (plant.initial, supervisor.initial)
    seen = {start}
    queue = deque([start])
    transitions = {}
    patterns: Dict[Tuple[str, InputEvent], ControlPattern] = {}
    while queue:
        plant_state, memory = queue.popleft()
        source = state_name(plant_state, memory)
        for x in plant.input_events:
            pattern = supervisor.pattern(memory, x)
            if pattern is None:
                raise ModelMismatchError(f"Supervisor has no pattern at ({memory}, {x.label})")
            patterns[(source, x)] = pattern
            for move in plant.moves(plant_state, x):
                if not pattern.allows(move.event):
                    continue
                following = supervisor.next_memory(memory, x, move.event)
                if following is None:
                    raise ModelMismatchError(
                        f"Supervisor has no update at ({memory}, {x.label}, {move.event.label})"
                    )
                target = (move.target, following)
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
                transitions[(source, x, move.event)] = (move.output, state_name(*target))

    components = {state_name(*pair): pair for pair in seen}
    machine = OpenDes(
        states=tuple(components),
        initial=state_name(*start),
        marked=frozenset(n for n, (q, _) in components.items() if q in plant.marked),
        input_alphabet=plant.input_alphabet,
        output_alphabet=plant.output_alphabet,
        input_events=plant.input_events,
        controllable=plant.controllable,
        uncontrollable=plant.uncontrollable,
        transitions=transitions,
    )
    loop = ClosedLoop(
        machine=machine,
        product_marked=frozenset(
            n for n, (q, m) in components.items()
            if q in plant.marked and m in supervisor.marked
        ),
        patterns=patterns,
        components=components,
        plant_fingerprint=plant.fingerprint(),
    )
    blocked = loop.blocked()
    if blocked:
        state, x = blocked[0]
        logger.warning(f"Closed loop blocks {len(blocked)} inputs, first at ({state}, {x.label})")
    logger.info(f"Composed closed loop with {len(components)} states")
    return loop
