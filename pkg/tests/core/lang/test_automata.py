"""Tests for the finite automata helpers."""

from core.lang.automata import Nfa, determinize, equivalence_witness, intersect, language_difference
from core.lang.search import breadth_first


def _nfa(edges, accepting, initial='0'):
    nfa = Nfa(initial=initial)
    for source, symbol, target in edges:
        nfa.add(source, symbol, target)
    nfa.accepting.update(accepting)
    return nfa


def test_determinize_follows_epsilon_moves():
    """Test subset construction through ε-moves."""
    # Setup
    nfa = _nfa([('0', None, '1'), ('1', 'a', '2'), ('0', 'a', '0')], {'2'})

    # Execute
    dfa = determinize(nfa)

    # Verify
    assert dfa.accepts(('a',))
    assert dfa.accepts(('a', 'a'))
    assert not dfa.accepts(())
    assert not dfa.accepts(('b',))


def test_intersect():
    """Test the product automaton."""
    ends_in_a = determinize(_nfa([('0', 'a', '0'), ('0', 'b', '0'), ('0', 'a', '1')], {'1'}))
    length_two = determinize(_nfa([
        ('0', 'a', '1'), ('0', 'b', '1'), ('1', 'a', '2'), ('1', 'b', '2'),
    ], {'2'}))

    both = intersect(ends_in_a, length_two)

    assert both.accepts(('b', 'a'))
    assert not both.accepts(('a',))
    assert not both.accepts(('a', 'b'))


def test_language_difference_is_shortest_canonical():
    """Test the counterexample search."""
    anything = determinize(_nfa([('0', 'a', '0'), ('0', 'b', '0')], {'0'}))
    only_a = determinize(_nfa([('0', 'a', '0')], {'0'}))

    assert language_difference(anything, only_a) == ('b',)
    assert language_difference(only_a, anything) is None


def test_equivalence_witness():
    """Test the symmetric difference witness."""
    first = determinize(_nfa([('0', 'a', '1'), ('1', 'b', '2')], {'2'}))
    second = determinize(_nfa([('0', 'a', '1')], {'1'}))

    assert equivalence_witness(first, first) is None
    assert equivalence_witness(first, second) == ('a',)


def test_breadth_first_yields_shortest_words():
    """Test that every state comes with its canonical access word."""
    graph = {'s': [('b', 't'), ('a', 'u')], 'u': [('a', 't')], 't': []}

    visited = dict(breadth_first('s', lambda state: graph[state]))

    assert visited == {'s': (), 'u': ('a',), 't': ('b',)}
