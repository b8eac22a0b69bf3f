"""
Command-line entry point.

Usage:
    rdes validate MODEL
    rdes check --plant P --spec K [--mode literal|local|both] [--depth D]
    rdes synth --plant P --spec K [--out SUP] [--dot ARENA] [--depth D]
    rdes enum --plant P --depth D [--marked] [--io | --extended]
    rdes simulate --plant P --sup S --env random|adversarial|script --steps N --seed S

Exit codes: 0 success, 1 failed check or unrealizable, 2 usage or input error.
"""

import argparse
import sys
from typing import List, Optional

from config import SYNTHESIS_CONFIG
from core.errors import RdesError
from utils.logger import get_logger
from . import commands

logger = get_logger(__name__)

EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='rdes',
        description='Reactive supervisor synthesis for open discrete event systems',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    validate = sub.add_parser('validate', help='Validate a plant or spec file')
    validate.add_argument('model', type=str)
    validate.set_defaults(handler=commands.run_validate)

    check = sub.add_parser('check', help='Check controllability and closedness')
    check.add_argument('--plant', required=True, type=str)
    check.add_argument('--spec', required=True, type=str)
    check.add_argument('--mode', choices=('literal', 'local', 'both'), default='both')
    check.add_argument('--depth', type=int, default=SYNTHESIS_CONFIG['default_depth'])
    check.set_defaults(handler=commands.run_check)

    synth = sub.add_parser('synth', help='Synthesize a supervisor')
    synth.add_argument('--plant', required=True, type=str)
    synth.add_argument('--spec', required=True, type=str)
    synth.add_argument('--out', dest='out', type=str)
    synth.add_argument('--dot', dest='dot', type=str)
    synth.add_argument('--depth', type=int, default=SYNTHESIS_CONFIG['default_depth'])
    synth.set_defaults(handler=commands.run_synth)

    enum = sub.add_parser('enum', help='Enumerate plant languages')
    enum.add_argument('--plant', required=True, type=str)
    enum.add_argument('--depth', type=int, default=SYNTHESIS_CONFIG['default_depth'])
    enum.add_argument('--marked', action='store_true')
    view = enum.add_mutually_exclusive_group()
    view.add_argument('--io', dest='io', action='store_true')
    view.add_argument('--extended', dest='io', action='store_false')
    enum.set_defaults(handler=commands.run_enum, io=False)

    simulate = sub.add_parser('simulate', help='Simulate a supervised plant')
    simulate.add_argument('--plant', required=True, type=str)
    simulate.add_argument('--sup', required=True, type=str)
    simulate.add_argument('--env', choices=('random', 'adversarial', 'script'), default='random')
    simulate.add_argument('--steps', type=int, default=10)
    simulate.add_argument('--seed', type=int, default=0)
    simulate.add_argument('--script', type=str, default='', help='Space-separated input labels')
    simulate.set_defaults(handler=commands.run_simulate)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one subcommand.

    Args:
        argv: Argument vector without the program name

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    try:
        return args.handler(args)
    except (RdesError, ValueError, OSError) as e:
        logger.debug(f"Command {args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
