"""
Closed-loop simulation under an environment policy.

Internal choices are drawn uniformly from the pattern-enabled moves with a
per-call seeded generator, so equal seeds give equal traces.
"""

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Sequence, Tuple

from core.des.events import InputEvent, InternalEvent, OutputEvent
from core.errors import ModelMismatchError
from core.game.patterns import ControlPattern
from utils.logger import get_logger
from .closed_loop import ClosedLoop

logger = get_logger(__name__)

RANDOM = 'random'
ADVERSARIAL = 'adversarial'
SCRIPT = 'script'


@dataclass(frozen=True)
class EnvPolicy:
    """How the environment picks inputs."""

    kind: str
    seed: int = 0
    word: Tuple[InputEvent, ...] = ()

    @classmethod
    def random(cls, seed: int = 0) -> 'EnvPolicy':
        return cls(RANDOM, seed)

    @classmethod
    def adversarial(cls, seed: int = 0) -> 'EnvPolicy':
        return cls(ADVERSARIAL, seed)

    @classmethod
    def script(cls, word: Sequence[InputEvent], seed: int = 0) -> 'EnvPolicy':
        return cls(SCRIPT, seed, tuple(word))


class TraceStep(NamedTuple):
    input: InputEvent
    pattern: ControlPattern
    internal: InternalEvent
    output: OutputEvent
    state: str


def marking_distances(loop: ClosedLoop) -> Dict[str, int]:
    """Backward breadth-first distance to the product-marked states."""
    predecessors: Dict[str, List[str]] = {}
    for (source, _, _), (_, target) in loop.machine.transitions.items():
        predecessors.setdefault(target, []).append(source)
    distance = {state: 0 for state in loop.product_marked}
    queue = deque(sorted(loop.product_marked))
    while queue:
        state = queue.popleft()
        for pred in predecessors.get(state, ()):
            if pred not in distance:
                distance[pred] = distance[state] + 1
                queue.append(pred)
    return distance


def _adversarial_input(loop: ClosedLoop, state: str, distance: Dict[str, int]) -> InputEvent:
    """Input whose worst successor is farthest from the marking; blocking inputs first."""
    unreachable = len(loop.machine.states) + 1

    def score(x: InputEvent) -> int:
        moves = loop.machine.moves(state, x)
        if not moves:
            return unreachable + 1
        return max(distance.get(move.target, unreachable) for move in moves)

    best = max(score(x) for x in loop.machine.input_events)
    return next(x for x in loop.machine.input_events if score(x) == best)


def simulate(loop: ClosedLoop, policy: EnvPolicy, steps: int) -> Tuple[TraceStep, ...]:
    """
    Run the closed loop for at most steps steps.

    Args:
        loop: Closed loop
        policy: Environment policy
        steps: Step bound

    Returns:
        Trace; shorter than steps when a script ends or an input is blocked

    Raises:
        ModelMismatchError: If a script uses an undeclared input event
        ValueError: If steps is negative or the policy kind is unknown
    """
    if steps < 0:
        raise ValueError(f"Invalid steps: {steps}")
    if policy.kind not in (RANDOM, ADVERSARIAL, SCRIPT):
        raise ValueError(f"Invalid environment policy: {policy.kind}")
    machine = loop.machine
    if policy.kind == SCRIPT:
        undeclared = [x for x in policy.word if x not in machine.input_events]
        if undeclared:
            raise ModelMismatchError(f"Script uses undeclared input event {undeclared[0].label}")
        steps = min(steps, len(policy.word))

    rng = random.Random(policy.seed)
    distance = marking_distances(loop) if policy.kind == ADVERSARIAL else {}
    state = machine.initial
    trace: List[TraceStep] = []
    for index in range(steps if machine.input_events else 0):
        if policy.kind == SCRIPT:
            x = policy.word[index]
        elif policy.kind == ADVERSARIAL:
            x = _adversarial_input(loop, state, distance)
        else:
            x = rng.choice(machine.input_events)

        moves = machine.moves(state, x)
        if not moves:
            logger.warning(f"Input {x.label} blocked at {state}; stopping after {index} steps")
            break
        move = rng.choice(moves)
        trace.append(TraceStep(x, loop.patterns[(state, x)], move.event, move.output, move.target))
        state = move.target
    return tuple(trace)


def format_trace(trace: Sequence[TraceStep]) -> str:
    """One ``in=... pattern=... fired=... out=... state=...`` line per step."""
    return ''.join(
        f"in={step.input.label} pattern={step.pattern.label} fired={step.internal.label} "
        f"out={step.output.label} state={step.state}\n"
        for step in trace
    )
