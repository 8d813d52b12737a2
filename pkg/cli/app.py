import argparse
import json
import logging
import sys
from typing import List, Optional

from cli.commands import chern, chi, crit, orbit, polytopes
from config.settings import settings
from core.constants import EXIT_GENERICITY_ERROR, EXIT_INPUT_ERROR, EXIT_OK
from core.exceptions import (
    DataInconsistencyError,
    DegenerateSampleError,
    DomainError,
    GenericityError,
    InputError,
)
from core.logging_utils import get_structured_logger
from core.performance import performance_monitor, track_operation

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)

# Global flags may be given before or after the subcommand
_GLOBAL_DEFAULTS = {
    "seed": None,
    "tol": None,
    "plain": False,
    "verbose": False,
    "paper_sign": False,
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Seed of the generic coefficients")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="Residual tolerance for numeric reports")
    common.add_argument("--plain", action="store_true", default=argparse.SUPPRESS, help="Print the bare result")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="Log progress and include breakdowns")
    common.add_argument("--paper-sign", action="store_true", default=argparse.SUPPRESS,
                        help="Also report the (-1)^(n+1) sign convention for mu")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="npi",
        description=f"{settings.APP_NAME} v{settings.APP_VERSION}",
        parents=[common],
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (polytopes, chi, orbit, crit, chern):
        module.register(subparsers, common)
    return parser


def _apply_defaults(args: argparse.Namespace):
    for name, default in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.seed is None:
        args.seed = settings.DEFAULT_SEED


def _render(result, plain: bool) -> str:
    if plain:
        return json.dumps(result.result, sort_keys=True, default=str)
    return result.to_json()


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch one command and print its CommandResult; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR
    _apply_defaults(args)
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)

    try:
        settings.validate()
        with track_operation(args.command_name):
            result = args.handler(args)
    except (GenericityError, DegenerateSampleError, DataInconsistencyError) as e:
        structured_logger.error("Command failed", command=args.command_name, error=type(e).__name__)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GENERICITY_ERROR
    except (InputError, DomainError) as e:
        structured_logger.error("Command rejected input", command=args.command_name, error=type(e).__name__)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except RuntimeError as e:
        print(f"error: invalid settings: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    print(_render(result, args.plain))
    structured_logger.info("Command completed", command=args.command_name)
    if args.verbose:
        structured_logger.info("Timings", **performance_monitor.get_performance_summary())
    return EXIT_OK


def main():
    sys.exit(run())
