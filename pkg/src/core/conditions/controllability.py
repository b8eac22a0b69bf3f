"""
Output controllability of a reactive specification.

The exact check explores the product of the plant with A_K. In literal mode
a pair (x, y) from Σ^io_u is a premise wherever any plant transition
realizes it; in local mode only an uncontrollable or stutter transition at
the reached plant state counts. A premise whose A_K step leaves K̄ is a
violation.
"""

from typing import Dict, FrozenSet, List, Optional, Tuple

from core.des.events import InputEvent, OutputEvent, word_key
from core.des.plant import OpenDes
from core.des.spec import SpecTransducer
from core.game.safety import complete_to_safety_automaton
from core.lang.enumeration import check_depth, io_reach
from utils.logger import get_logger
from .verdict import BOUNDED, EXACT, LITERAL, LOCAL, MODES, CheckVerdict

logger = get_logger(__name__)

IoPair = Tuple[InputEvent, OutputEvent]


def uncontrollable_io(plant: OpenDes) -> FrozenSet[IoPair]:
    """
    Σ^io_u: every (x, y) some uncontrollable transition produces.

    Stutter transitions added by completion count as uncontrollable.
    """
    return frozenset(
        (x, output)
        for (_, x, event), (output, _) in plant.transitions.items()
        if not event.controllable
    )


def _premises(
    plant: OpenDes,
    state: str,
    mode: str,
    global_pairs: FrozenSet[IoPair]
) -> List[Tuple[IoPair, str]]:
    """Premise pairs at one plant state with the plant successor they lead to."""
    premises = []
    for x in plant.input_events:
        for move in plant.moves(state, x):
            pair = (x, move.output)
            if mode == LOCAL and move.event.controllable:
                continue
            if mode == LITERAL and pair not in global_pairs:
                continue
            premises.append((pair, move.target))
    return premises


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"Invalid controllability mode: {mode}")


def check_output_controllability(
    plant: OpenDes,
    spec: SpecTransducer,
    mode: str = LOCAL
) -> CheckVerdict:
    """
    Decide K̄·Σ^io_u ∩ L_io(P) ⊆ K̄ exactly.

    Args:
        plant: Validated plant
        spec: Specification, input-complete over the plant's Σ_x
        mode: 'literal' or 'local'

    Returns:
        CheckVerdict with the shortest canonical witness w(x, y)

    Raises:
        SpecificationError: If the transducer is not input-complete
    """
    _check_mode(mode)
    automaton = complete_to_safety_automaton(spec, plant.input_events)
    global_pairs = uncontrollable_io(plant)

    start = (plant.initial, automaton.initial)
    if not automaton.in_closure(automaton.initial):
        return CheckVerdict(True, method=EXACT, mode=mode)

    seen = {start}
    layer: Dict[Tuple[str, str], tuple] = {start: ()}
    while layer:
        violations = []
        following: Dict[Tuple[str, str], tuple] = {}
        for (state, spec_state), word in layer.items():
            for pair, _ in _premises(plant, state, mode, global_pairs):
                if not automaton.in_closure(automaton.step(spec_state, *pair)):
                    violations.append(word + (pair,))
            for x in plant.input_events:
                for move in plant.moves(state, x):
                    target_spec = automaton.step(spec_state, x, move.output)
                    target = (move.target, target_spec)
                    if not automaton.in_closure(target_spec) or target in seen:
                        continue
                    candidate = word + ((x, move.output),)
                    if target not in following or word_key(candidate) < word_key(following[target]):
                        following[target] = candidate
        if violations:
            witness = min(violations, key=word_key)
            logger.info(f"Output controllability ({mode}) fails at word of length {len(witness)}")
            return CheckVerdict(False, witness, EXACT, mode)
        seen.update(following)
        layer = following

    return CheckVerdict(True, method=EXACT, mode=mode)


def bounded_output_controllability(
    plant: OpenDes,
    spec: SpecTransducer,
    mode: str = LOCAL,
    depth: int = 4
) -> CheckVerdict:
    """
    Enumeration oracle for check_output_controllability up to depth.

    Every I/O word of the plant up to depth is replayed through A_K; a word
    w in K̄ extended by a premise pair (x, y) must stay in K̄.
    """
    _check_mode(mode)
    check_depth(depth)
    automaton = complete_to_safety_automaton(spec, plant.input_events)
    global_pairs = uncontrollable_io(plant)
    reach = io_reach(plant, depth)

    violations = []
    for word, states in reach.items():
        if len(word) >= depth:
            continue
        spec_state: Optional[str] = automaton.initial
        for x, y in word:
            spec_state = automaton.step(spec_state, x, y)
        if not automaton.in_closure(spec_state):
            continue
        for state in states:
            for pair, _ in _premises(plant, state, mode, global_pairs):
                if not automaton.in_closure(automaton.step(spec_state, *pair)):
                    violations.append(word + (pair,))

    if violations:
        return CheckVerdict(False, min(violations, key=word_key), BOUNDED, mode)
    return CheckVerdict(True, method=BOUNDED, mode=mode)
