"""
Three-player supervisory control game.

Components:
- patterns: control pattern enumeration
- safety: A_K completion of a specification
- arena: forward arena construction
- solver: safety and liveness fixpoint
- oracle: brute-force cross-check solver
- strategy: positional strategy extraction
- dot: Graphviz export
"""

from .arena import ENV, PLANT, SUP, EnvNode, GameArena, PlantNode, SupNode, build_arena
from .dot import export_dot
from .oracle import brute_force_solve
from .patterns import ControlPattern, control_patterns
from .safety import SafetyAutomaton, complete_to_safety_automaton
from .solver import GameSolution, solve
from .strategy import extract_strategy

__all__ = [
    'ENV',
    'PLANT',
    'SUP',
    'EnvNode',
    'GameArena',
    'PlantNode',
    'SupNode',
    'build_arena',
    'export_dot',
    'brute_force_solve',
    'ControlPattern',
    'control_patterns',
    'SafetyAutomaton',
    'complete_to_safety_automaton',
    'GameSolution',
    'solve',
    'extract_strategy',
]
