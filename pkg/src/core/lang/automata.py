"""
Finite automata used by the exact language checks.

Provides an ε-NFA, subset construction, DFA product and a shortest
counterexample search for language inclusion. Missing DFA transitions lead
to an implicit rejecting sink.

Example:
    nfa = Nfa(initial='k0')
    nfa.add('k0', 'y1', 'k1')
    nfa.accepting.add('k1')
    dfa = determinize(nfa)
    assert dfa.accepts(('y1',))
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

from core.des.events import canonical_key, word_key
from .search import breadth_first

State = Hashable
Symbol = Hashable


@dataclass
class Nfa:
    """Nondeterministic automaton; a None symbol is an ε-move."""

    initial: State
    edges: Dict[State, List[Tuple[Optional[Symbol], State]]] = field(default_factory=dict)
    accepting: Set[State] = field(default_factory=set)

    def add(self, source: State, symbol: Optional[Symbol], target: State) -> None:
        self.edges.setdefault(source, []).append((symbol, target))

    def epsilon_closure(self, states: Iterable[State]) -> FrozenSet[State]:
        closure = set(states)
        stack = list(closure)
        while stack:
            state = stack.pop()
            for symbol, target in self.edges.get(state, ()):
                if symbol is None and target not in closure:
                    closure.add(target)
                    stack.append(target)
        return frozenset(closure)

    def symbols(self, states: Iterable[State]) -> List[Symbol]:
        found = {
            symbol
            for state in states
            for symbol, _ in self.edges.get(state, ())
            if symbol is not None
        }
        return sorted(found, key=canonical_key)

    def move(self, states: Iterable[State], symbol: Symbol) -> FrozenSet[State]:
        targets = {
            target
            for state in states
            for label, target in self.edges.get(state, ())
            if label == symbol
        }
        return self.epsilon_closure(targets)


@dataclass(frozen=True)
class Dfa:
    """Deterministic automaton with a partial transition map."""

    initial: State
    delta: Dict[State, Dict[Symbol, State]]
    accepting: FrozenSet[State]

    def step(self, state: Optional[State], symbol: Symbol) -> Optional[State]:
        if state is None:
            return None
        return self.delta.get(state, {}).get(symbol)

    def accepts(self, word: Iterable[Symbol]) -> bool:
        state = self.initial
        for symbol in word:
            state = self.step(state, symbol)
            if state is None:
                return False
        return state in self.accepting

    def symbols(self, state: Optional[State]) -> List[Symbol]:
        if state is None:
            return []
        return sorted(self.delta.get(state, {}), key=canonical_key)


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction over the reachable subsets."""
    start = nfa.epsilon_closure([nfa.initial])
    delta: Dict[State, Dict[Symbol, State]] = {}
    stack = [start]
    seen = {start}
    while stack:
        subset = stack.pop()
        row = delta.setdefault(subset, {})
        for symbol in nfa.symbols(subset):
            target = nfa.move(subset, symbol)
            if not target:
                continue
            row[symbol] = target
            if target not in seen:
                seen.add(target)
                stack.append(target)
    accepting = frozenset(s for s in seen if s & nfa.accepting)
    return Dfa(start, delta, accepting)


def intersect(a: Dfa, b: Dfa) -> Dfa:
    """Product automaton accepting L(a) ∩ L(b)."""
    start = (a.initial, b.initial)
    delta: Dict[State, Dict[Symbol, State]] = {}
    stack = [start]
    seen = {start}
    while stack:
        pair = stack.pop()
        row = delta.setdefault(pair, {})
        for symbol in a.symbols(pair[0]):
            target = (a.step(pair[0], symbol), b.step(pair[1], symbol))
            if target[1] is None:
                continue
            row[symbol] = target
            if target not in seen:
                seen.add(target)
                stack.append(target)
    accepting = frozenset(p for p in seen if p[0] in a.accepting and p[1] in b.accepting)
    return Dfa(start, delta, accepting)


def language_difference(a: Dfa, b: Dfa) -> Optional[Tuple[Symbol, ...]]:
    """
    Shortest word in L(a) but not in L(b).

    Returns:
        The canonical-first shortest such word, or None when L(a) ⊆ L(b)
    """
    def successors(pair):
        return [
            (symbol, (a.step(pair[0], symbol), b.step(pair[1], symbol)))
            for symbol in a.symbols(pair[0])
        ]

    for (state_a, state_b), word in breadth_first((a.initial, b.initial), successors):
        if state_a in a.accepting and state_b not in b.accepting:
            return word
    return None


def equivalence_witness(a: Dfa, b: Dfa) -> Optional[Tuple[Symbol, ...]]:
    """Shortest word in the symmetric difference of L(a) and L(b), or None."""
    candidates = [w for w in (language_difference(a, b), language_difference(b, a)) if w is not None]
    if not candidates:
        return None
    return min(candidates, key=word_key)
