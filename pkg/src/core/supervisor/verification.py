"""
Closed-loop verification: non-blocking and specification equalities.

Each equality is decided on automata over (input, output) pairs and
cross-checked by bounded enumeration.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional

import networkx as nx

from config import SYNTHESIS_CONFIG
from core.conditions.verdict import BOUNDED, EXACT, CheckVerdict
from core.des.events import word_key
from core.des.spec import SpecTransducer
from core.game.safety import complete_to_safety_automaton
from core.lang.automata import Dfa, Nfa, determinize, equivalence_witness
from core.lang.enumeration import io_language, prefix_closure
from core.lang.search import breadth_first
from utils.logger import get_logger
from .closed_loop import ClosedLoop

logger = get_logger(__name__)

PRODUCT = 'product'
PLANT = 'plant'


def _accepting(loop: ClosedLoop, marking: str) -> frozenset:
    if marking == PRODUCT:
        return loop.product_marked
    if marking == PLANT:
        return loop.machine.marked
    raise ValueError(f"Invalid marking: {marking}")


def check_nonblocking(loop: ClosedLoop, marking: str = PRODUCT) -> CheckVerdict:
    """
    Decide non-blocking by coaccessibility.

    The closed loop is deterministic over (input, internal) pairs, so it is
    non-blocking iff every reachable state reaches an accepting one.

    Args:
        loop: Closed loop
        marking: 'product' or 'plant'

    Returns:
        CheckVerdict; the witness is the shortest non-empty xp-word reaching
        a non-coaccessible state, or the empty word when the initial state
        is non-coaccessible and has no moves
    """
    accepting = _accepting(loop, marking)
    machine = loop.machine
    graph = nx.DiGraph()
    graph.add_nodes_from(machine.states)
    graph.add_edges_from(
        (source, target) for (source, _, _), (_, target) in machine.transitions.items()
    )
    coaccessible = set(accepting)
    for state in accepting:
        coaccessible |= nx.ancestors(graph, state)

    def successors(state):
        return [
            ((x, move.event), move.target)
            for x in machine.input_events
            for move in machine.moves(state, x)
        ]

    witness = None
    for state, word in breadth_first(machine.initial, successors):
        if state in coaccessible:
            continue
        if word or not successors(state):
            witness = word
            break
        first = min(successors(state), key=lambda edge: word_key((edge[0],)))
        witness = (first[0],)
        break

    if witness is None:
        return CheckVerdict(True, method=EXACT)
    logger.info(f"Closed loop blocks under {marking} marking")
    return CheckVerdict(False, witness, EXACT)


def check_classical_nonblocking(
    generated: Iterable[Iterable[str]],
    marked: Iterable[Iterable[str]]
) -> CheckVerdict:
    """
    Conventional test closure(L_m) = L on finite internal-event languages.

    Example:
        check_classical_nonblocking(
            [(), ('s1',), ('s2',), ('s1', 's2')], [('s2',), ('s1', 's2')]
        ).holds  # True
    """
    language = {tuple(word) for word in generated}
    closure = prefix_closure(tuple(word) for word in marked)
    difference = language ^ set(closure)
    if not difference:
        return CheckVerdict(True, method=EXACT)
    return CheckVerdict(False, min(difference, key=word_key), EXACT)


def _loop_dfa(loop: ClosedLoop, accepting: Optional[Iterable[str]]) -> Dfa:
    machine = loop.machine
    nfa = Nfa(initial=machine.initial)
    for (source, x, _), (y, target) in machine.transitions.items():
        nfa.add(source, (x, y), target)
    nfa.accepting.update(machine.states if accepting is None else accepting)
    return determinize(nfa)


def _compare(left: Dfa, right: Dfa, left_words, right_words) -> CheckVerdict:
    difference = set(left_words) ^ set(right_words)
    bounded = (
        CheckVerdict(False, min(difference, key=word_key), BOUNDED)
        if difference else CheckVerdict(True, method=BOUNDED)
    )
    witness = equivalence_witness(left, right)
    return CheckVerdict(witness is None, witness, EXACT, cross_check=bounded)


@dataclass(frozen=True)
class VerificationReport:
    """Language equalities and non-blocking for one closed loop."""

    safe_equality: CheckVerdict
    marked_product_equality: CheckVerdict
    marked_plant_equality: CheckVerdict
    nonblocking: CheckVerdict
    depth: int

    @property
    def marking_divergence(self) -> bool:
        """True when plant and product marking give different verdicts or witnesses."""
        return (
            self.marked_plant_equality.holds != self.marked_product_equality.holds
            or self.marked_plant_equality.witness != self.marked_product_equality.witness
        )

    def to_document(self) -> Dict[str, Any]:
        return {
            'depth': self.depth,
            'safe_equality': self.safe_equality.to_document(),
            'marked_product_equality': self.marked_product_equality.to_document(),
            'marked_plant_equality': self.marked_plant_equality.to_document(),
            'nonblocking': self.nonblocking.to_document(),
            'marking_divergence': self.marking_divergence,
        }


def verify_specification(
    loop: ClosedLoop,
    spec: SpecTransducer,
    depth: Optional[int] = None
) -> VerificationReport:
    """
    Compare the closed loop's I/O languages with K̄ and K.

    Args:
        loop: Closed loop
        spec: Specification, input-complete over the plant's Σ_x
        depth: Cross-check depth; defaults to SYNTHESIS_CONFIG['verify_depth']

    Returns:
        VerificationReport
    """
    depth = SYNTHESIS_CONFIG['verify_depth'] if depth is None else depth
    automaton = complete_to_safety_automaton(spec, loop.machine.input_events)
    closure_dfa = automaton.to_dfa(closure=True)
    marked_dfa = automaton.to_dfa()

    spec_words = _spec_words(automaton, depth)
    closure_words = [w for w, state in spec_words if automaton.in_closure(state)]
    marked_words = [w for w, state in spec_words if state in automaton.marked]

    machine = loop.machine
    report = VerificationReport(
        safe_equality=_compare(
            _loop_dfa(loop, None), closure_dfa,
            io_language(machine, depth), closure_words,
        ),
        marked_product_equality=_compare(
            _loop_dfa(loop, loop.product_marked), marked_dfa,
            io_language(machine, depth, True, loop.product_marked), marked_words,
        ),
        marked_plant_equality=_compare(
            _loop_dfa(loop, machine.marked), marked_dfa,
            io_language(machine, depth, True), marked_words,
        ),
        nonblocking=check_nonblocking(loop),
        depth=depth,
    )
    if report.marking_divergence:
        logger.warning("Plant marking and product marking disagree on L_io,m(S/P) = K")
    return report


def _spec_words(automaton, depth: int):
    """(word, state) for every I/O word of the transducer up to depth."""
    spec = automaton.spec
    layer = [((), spec.initial)]
    result = list(layer)
    for _ in range(depth):
        layer = [
            (word + ((x, y),), target)
            for word, state in layer
            for (source, x), (y, target) in spec.transitions.items()
            if source == state and x in automaton.input_events
        ]
        result.extend(layer)
    return result
