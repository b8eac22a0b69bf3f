"""
Completion of a specification transducer into the safety automaton A_K.

A_K reads (input, output) pairs. A pair whose output differs from the
transducer's, or whose transition is undefined, leads to the absorbing
state ⊥.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Tuple

from core.des.events import BOTTOM, InputEvent, OutputEvent, canonical_key
from core.des.spec import SpecTransducer
from core.errors import SpecificationError
from core.lang.automata import Dfa
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SafetyAutomaton:
    """
    Total acceptor over Q_k ∪ {⊥}.

    Args:
        spec: The input-complete transducer
        input_events: Σ_x the transducer was checked against
    """

    spec: SpecTransducer
    input_events: Tuple[InputEvent, ...]
    coaccessible: FrozenSet[str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'coaccessible', frozenset(self.spec.coaccessible()))

    @property
    def states(self) -> Tuple[str, ...]:
        return self.spec.states + (BOTTOM,)

    @property
    def initial(self) -> str:
        return self.spec.initial

    @property
    def marked(self) -> FrozenSet[str]:
        return self.spec.marked

    def step(self, state: str, x: InputEvent, y: OutputEvent) -> str:
        """δ̃_k: the transducer successor when y matches γ_k, else ⊥."""
        if state == BOTTOM:
            return BOTTOM
        entry = self.spec.step(state, x)
        if entry is None or entry[0] != y:
            return BOTTOM
        return entry[1]

    def in_closure(self, state: str) -> bool:
        """True iff words ending in state are prefixes of K."""
        return state in self.coaccessible

    def to_dfa(self, closure: bool = False) -> Dfa:
        """
        DFA over (input, output) pairs accepting K, or K̄ when closure is set.

        For K̄ only coaccessible states are kept and all of them accept.
        """
        keep = self.coaccessible if closure else frozenset(self.spec.states)
        delta = {state: {} for state in self.spec.states if state in keep}
        for (source, x), (y, target) in sorted(
            self.spec.transitions.items(), key=lambda item: canonical_key(item[0])
        ):
            if source in keep and target in keep and x in self.input_events:
                delta[source][(x, y)] = target
        initial: Optional[str] = self.spec.initial if self.spec.initial in keep else None
        accepting = keep if closure else self.spec.marked
        return Dfa(initial, delta, frozenset(accepting))


def complete_to_safety_automaton(
    spec: SpecTransducer,
    input_events: Optional[Iterable[InputEvent]] = None
) -> SafetyAutomaton:
    """
    Build A_K after checking input-completeness.

    Args:
        spec: Specification transducer
        input_events: Declared Σ_x; defaults to the inputs the transducer mentions

    Returns:
        SafetyAutomaton

    Raises:
        SpecificationError: If δ_k is undefined for some state and input
    """
    events = tuple(sorted(
        set(spec.input_events if input_events is None else input_events),
        key=canonical_key,
    ))
    missing = spec.missing_inputs(events)
    if missing:
        state, x = missing[0]
        logger.error(f"Specification undefined at ({state}, {x.label})")
        raise SpecificationError(
            f"Specification is not input-complete: no transition for ({state}, {x.label})"
        )
    return SafetyAutomaton(spec, events)
