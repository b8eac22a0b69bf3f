"""
Necessary conditions for reactive supervisor existence.

Components:
- verdict: CheckVerdict value object
- controllability: Σ^io_u and output controllability (literal and local)
- closedness: L_io,m-closedness on output projections
"""

from .closedness import bounded_closedness, check_closedness
from .controllability import (
    bounded_output_controllability,
    check_output_controllability,
    uncontrollable_io,
)
from .verdict import BOUNDED, EXACT, LITERAL, LOCAL, MODES, CheckVerdict

__all__ = [
    'bounded_closedness',
    'check_closedness',
    'bounded_output_controllability',
    'check_output_controllability',
    'uncontrollable_io',
    'BOUNDED',
    'EXACT',
    'LITERAL',
    'LOCAL',
    'MODES',
    'CheckVerdict',
]
