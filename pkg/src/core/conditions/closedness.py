"""
L_io,m-closedness of a specification: P_y(K) = closure(P_y(K)) ∩ P_y(L_io,m(P)).

Output projection drops silent outputs, so each side is an ε-NFA over
output events that is determinized before comparison.
"""

from collections import deque
from typing import Dict, Iterable, List, Set, Tuple

from core.des.events import InputEvent, OutputEvent, word_key
from core.des.plant import OpenDes
from core.des.spec import SpecTransducer
from core.lang.automata import Dfa, Nfa, determinize, equivalence_witness, intersect
from core.lang.enumeration import check_depth
from utils.logger import get_logger
from .verdict import BOUNDED, EXACT, CheckVerdict

logger = get_logger(__name__)


def _spec_outputs(
    spec: SpecTransducer,
    inputs: Iterable[InputEvent],
    keep: Iterable[str],
    accepting: Iterable[str]
) -> Dfa:
    kept: Set[str] = set(keep)
    declared = set(inputs)
    nfa = Nfa(initial=spec.initial)
    for (source, x), (y, target) in spec.transitions.items():
        if source in kept and target in kept and x in declared:
            nfa.add(source, None if y.is_silent else y, target)
    nfa.accepting.update(state for state in accepting if state in kept)
    if spec.initial not in kept:
        nfa.edges.clear()
        nfa.accepting.clear()
    return determinize(nfa)


def _plant_outputs(plant: OpenDes) -> Dfa:
    nfa = Nfa(initial=plant.initial)
    for (source, _, _), (y, target) in plant.transitions.items():
        nfa.add(source, None if y.is_silent else y, target)
    nfa.accepting.update(plant.marked)
    return determinize(nfa)


def check_closedness(plant: OpenDes, spec: SpecTransducer) -> CheckVerdict:
    """
    Decide L_io,m-closedness exactly.

    Args:
        plant: Validated plant
        spec: Specification transducer

    Returns:
        CheckVerdict whose witness is the shortest output word in the
        symmetric difference of the two sides
    """
    marked = _spec_outputs(spec, plant.input_events, spec.states, spec.marked)
    coaccessible = spec.coaccessible()
    closure = _spec_outputs(spec, plant.input_events, coaccessible, coaccessible)
    right = intersect(closure, _plant_outputs(plant))

    witness = equivalence_witness(marked, right)
    if witness is None:
        return CheckVerdict(True, method=EXACT)
    logger.info(f"Closedness fails at output word of length {len(witness)}")
    return CheckVerdict(False, witness, EXACT)


def _output_configurations(
    initial: str,
    moves: Dict[str, List[Tuple[OutputEvent, str]]],
    depth: int
) -> Set[Tuple[str, tuple]]:
    """
    All (state, output word) pairs reachable with at most depth visible outputs.

    Silent outputs do not count towards depth, so runs of any length are
    covered; the pair set is finite because words are bounded.
    """
    start = (initial, ())
    seen = {start}
    queue = deque([start])
    while queue:
        state, word = queue.popleft()
        for y, target in moves.get(state, ()):
            if y.is_silent:
                step = (target, word)
            elif len(word) < depth:
                step = (target, word + (y,))
            else:
                continue
            if step not in seen:
                seen.add(step)
                queue.append(step)
    return seen


def bounded_closedness(plant: OpenDes, spec: SpecTransducer, depth: int = 4) -> CheckVerdict:
    """
    Enumeration oracle for check_closedness.

    Both sides are compared on every output word of length at most depth.
    Membership of such a word is decided over all runs, including runs whose
    silent outputs make them longer than depth.
    """
    check_depth(depth)
    declared = set(plant.input_events)

    spec_moves: Dict[str, List[Tuple[OutputEvent, str]]] = {}
    for (source, x), (y, target) in spec.transitions.items():
        if x in declared:
            spec_moves.setdefault(source, []).append((y, target))
    plant_moves: Dict[str, List[Tuple[OutputEvent, str]]] = {}
    for (source, _, _), (y, target) in plant.transitions.items():
        plant_moves.setdefault(source, []).append((y, target))

    spec_configs = _output_configurations(spec.initial, spec_moves, depth)
    coaccessible = spec.coaccessible()
    left = {word for state, word in spec_configs if state in spec.marked}
    closure = {word for state, word in spec_configs if state in coaccessible}
    plant_marked = {
        word for state, word in _output_configurations(plant.initial, plant_moves, depth)
        if state in plant.marked
    }

    difference = left ^ (closure & plant_marked)
    if not difference:
        return CheckVerdict(True, method=BOUNDED)
    return CheckVerdict(False, min(difference, key=word_key), BOUNDED)
