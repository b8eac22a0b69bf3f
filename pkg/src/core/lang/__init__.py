"""
Language operations over open DES plants.

Components:
- words: word types, projections and formatting
- enumeration: bounded extended and I/O languages, prefix closure
- relation: sequential input-output relation checks
- automata: NFA/DFA helpers for the exact checks
- search: canonical breadth-first search
"""

from .automata import Dfa, Nfa, determinize, equivalence_witness, intersect, language_difference
from .enumeration import (
    enumerate_extended,
    io_language,
    io_reach,
    is_prefix_closed,
    prefix_closure,
)
from .relation import RelationReport, check_sequential_relation
from .search import breadth_first
from .words import ExtendedWord, IoWord, XpWord, format_word, project

__all__ = [
    'Dfa',
    'Nfa',
    'determinize',
    'equivalence_witness',
    'intersect',
    'language_difference',
    'enumerate_extended',
    'io_language',
    'io_reach',
    'is_prefix_closed',
    'prefix_closure',
    'RelationReport',
    'check_sequential_relation',
    'breadth_first',
    'ExtendedWord',
    'IoWord',
    'XpWord',
    'format_word',
    'project',
]
