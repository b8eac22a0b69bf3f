"""
End-to-end supervisor synthesis.

validate -> complete -> conditions -> A_K -> arena -> solve -> extract ->
realize -> compose -> verify.

Example:
    result = synthesize(load_model('plant.json'), load_model('spec.json'))
    if result.realizable:
        print(dump_supervisor(result.supervisor))
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from core.conditions.closedness import check_closedness
from core.conditions.controllability import check_output_controllability
from core.conditions.verdict import LITERAL, LOCAL
from core.des.plant import OpenDes
from core.des.spec import SpecTransducer
from core.des.validation import complete_inputs, validate_plant
from core.errors import SpecificationError, ValidationError
from core.game.arena import GameArena, build_arena
from core.game.safety import complete_to_safety_automaton
from core.game.solver import GameSolution, solve
from core.game.strategy import extract_strategy
from utils.logger import get_logger
from .closed_loop import ClosedLoop, compose
from .machine import SupervisorMachine, realize_supervisor
from .verification import VerificationReport, verify_specification

logger = get_logger(__name__)


@dataclass(frozen=True)
class SynthesisResult:
    """Pipeline outcome with every intermediate verdict."""

    realizable: bool
    plant: OpenDes
    arena: GameArena
    solution: GameSolution
    report: Dict[str, Any]
    supervisor: Optional[SupervisorMachine] = None
    closed_loop: Optional[ClosedLoop] = None
    verification: Optional[VerificationReport] = None

    __hash__ = None


def prepare_plant(plant: OpenDes) -> OpenDes:
    """
    Complete a plant and reject it unless it validates.

    Raises:
        ValidationError: If states are unreachable or name spaces overlap
    """
    completed = complete_inputs(plant)
    report = validate_plant(completed)
    if not report.ok:
        logger.error(f"Plant failed validation: {report.to_document()}")
        raise ValidationError("Plant failed validation", report)
    return completed


def synthesize(plant: OpenDes, spec: SpecTransducer, depth: Optional[int] = None) -> SynthesisResult:
    """
    Decide realizability and build the supervisor when it exists.

    Args:
        plant: Parsed plant (completed here)
        spec: Specification transducer
        depth: Verification cross-check depth

    Returns:
        SynthesisResult; realizable iff v_g0 is winning

    Raises:
        SpecificationError: If K is empty or not input-complete
        ValidationError: If the plant fails validation
    """
    if spec.is_empty():
        logger.error("Empty specification")
        raise SpecificationError("Specification marks no reachable state; K is empty")

    plant = prepare_plant(plant)
    automaton = complete_to_safety_automaton(spec, plant.input_events)

    conditions = {
        'output_controllable_literal': check_output_controllability(plant, spec, LITERAL),
        'output_controllable_local': check_output_controllability(plant, spec, LOCAL),
        'closed': check_closedness(plant, spec),
    }

    arena = build_arena(plant, automaton)
    solution = solve(arena)

    supervisor = closed_loop = verification = None
    if solution.realizable:
        strategy = extract_strategy(arena, solution.winning)
        supervisor = realize_supervisor(arena, strategy)
        closed_loop = compose(plant, supervisor)
        verification = verify_specification(closed_loop, spec, depth)

    necessary = (
        conditions['output_controllable_local'].holds and conditions['closed'].holds
    )
    if solution.realizable and not necessary:
        logger.warning("Realizable although a necessary condition fails")

    report = {
        'kind': 'synthesis',
        'realizable': solution.realizable,
        'conditions': {name: verdict.to_document() for name, verdict in conditions.items()},
        'game': solution.to_document(arena),
        'verification': None if verification is None else verification.to_document(),
        'audit': {
            'conditions_hold': necessary,
            'consistent': necessary == solution.realizable,
        },
    }
    logger.info(f"Synthesis finished: realizable={solution.realizable}")
    return SynthesisResult(
        realizable=solution.realizable,
        plant=plant,
        arena=arena,
        solution=solution,
        report=report,
        supervisor=supervisor,
        closed_loop=closed_loop,
        verification=verification,
    )
