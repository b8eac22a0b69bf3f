"""Subcommand handlers. Each returns an exit code and writes only to stdout."""

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Any, Dict

from core.conditions.closedness import bounded_closedness, check_closedness
from core.conditions.controllability import (
    bounded_output_controllability,
    check_output_controllability,
)
from core.conditions.verdict import LITERAL, LOCAL, CheckVerdict
from core.des.events import parse_input_label
from core.des.parser import load_model
from core.des.plant import OpenDes
from core.des.printer import dump_document
from core.des.spec import SpecTransducer
from core.des.validation import complete_inputs, validate_plant, validate_spec
from core.errors import ModelError
from core.game.dot import export_dot
from core.lang.enumeration import enumerate_extended, io_language
from core.lang.words import format_word
from core.supervisor.closed_loop import compose
from core.supervisor.serialization import dump_supervisor, load_supervisor
from core.supervisor.simulation import EnvPolicy, format_trace, simulate
from core.supervisor.synthesis import prepare_plant, synthesize
from utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1


def _load(path: str, kind: type):
    model = load_model(path)
    if not isinstance(model, kind):
        expected = 'plant' if kind is OpenDes else 'spec'
        raise ModelError(f"{path}: expected a {expected} document")
    return model


def _emit(document: Dict[str, Any]) -> None:
    sys.stdout.write(dump_document(document))


def run_validate(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    if isinstance(model, SpecTransducer):
        report = validate_spec(model)
    else:
        report = validate_plant(model)
    _emit(report.to_document())
    return EXIT_OK if report.ok else EXIT_FAILED


def run_check(args: argparse.Namespace) -> int:
    plant = prepare_plant(_load(args.plant, OpenDes))
    spec = _load(args.spec, SpecTransducer)
    modes = (LITERAL, LOCAL) if args.mode == 'both' else (args.mode,)

    verdicts: Dict[str, CheckVerdict] = {}
    for mode in modes:
        exact = check_output_controllability(plant, spec, mode)
        bounded = bounded_output_controllability(plant, spec, mode, args.depth)
        verdicts[f"output_controllable_{mode}"] = dataclasses.replace(exact, cross_check=bounded)
    verdicts['closed'] = dataclasses.replace(
        check_closedness(plant, spec),
        cross_check=bounded_closedness(plant, spec, args.depth),
    )

    document: Dict[str, Any] = {'kind': 'check'}
    document.update({name: verdict.to_document() for name, verdict in verdicts.items()})
    document['witnesses'] = {
        name: format_word(verdict.witness)
        for name, verdict in verdicts.items()
        if not verdict.holds
    }
    _emit(document)
    return EXIT_OK if all(v.holds for v in verdicts.values()) else EXIT_FAILED


def run_synth(args: argparse.Namespace) -> int:
    plant = _load(args.plant, OpenDes)
    spec = _load(args.spec, SpecTransducer)
    result = synthesize(plant, spec, args.depth)

    if args.out and result.supervisor is not None:
        Path(args.out).write_text(dump_supervisor(result.supervisor), encoding='utf-8')
        logger.info(f"Wrote supervisor to {args.out}")
    if args.dot:
        Path(args.dot).write_text(export_dot(result.arena, result.solution), encoding='utf-8')
        logger.info(f"Wrote arena to {args.dot}")

    _emit(result.report)
    return EXIT_OK if result.realizable else EXIT_FAILED


def run_enum(args: argparse.Namespace) -> int:
    plant = complete_inputs(_load(args.plant, OpenDes))
    if args.io:
        words = io_language(plant, args.depth, args.marked)
    else:
        words = enumerate_extended(plant, args.depth, args.marked)
    sys.stdout.write(''.join(format_word(word) + '\n' for word in words))
    return EXIT_OK


def run_simulate(args: argparse.Namespace) -> int:
    plant = prepare_plant(_load(args.plant, OpenDes))
    supervisor = load_supervisor(args.sup, plant)
    loop = compose(plant, supervisor)

    if args.env == 'script':
        word = [parse_input_label(label) for label in args.script.split()]
        policy = EnvPolicy.script(word, args.seed)
    elif args.env == 'adversarial':
        policy = EnvPolicy.adversarial(args.seed)
    else:
        policy = EnvPolicy.random(args.seed)

    sys.stdout.write(format_trace(simulate(loop, policy, args.steps)))
    return EXIT_OK
