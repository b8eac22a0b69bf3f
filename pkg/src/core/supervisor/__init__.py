"""
Reactive supervisor realization, closed loop and verification.

Components:
- machine: SupervisorMachine and strategy realization
- closed_loop: composition S/P
- verification: non-blocking and specification equalities
- synthesis: end-to-end pipeline
- simulation: closed-loop runs under environment policies
- serialization: supervisor documents
"""

from .closed_loop import ClosedLoop, compose
from .machine import SupervisorMachine, permissive_supervisor, realize_supervisor
from .serialization import dump_supervisor, load_supervisor, parse_supervisor
from .simulation import EnvPolicy, TraceStep, format_trace, simulate
from .synthesis import SynthesisResult, prepare_plant, synthesize
from .verification import (
    VerificationReport,
    check_classical_nonblocking,
    check_nonblocking,
    verify_specification,
)

__all__ = [
    'ClosedLoop',
    'compose',
    'SupervisorMachine',
    'permissive_supervisor',
    'realize_supervisor',
    'dump_supervisor',
    'load_supervisor',
    'parse_supervisor',
    'EnvPolicy',
    'TraceStep',
    'format_trace',
    'simulate',
    'SynthesisResult',
    'prepare_plant',
    'synthesize',
    'VerificationReport',
    'check_classical_nonblocking',
    'check_nonblocking',
    'verify_specification',
]
