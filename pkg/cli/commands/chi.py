import logging

from cli.commands import make_result
from cli.commands.polytopes import add_system_arguments
from cli.inputs import load_polytopes, load_system
from core.exceptions import InputError
from schemas.command import CommandResult
from services.chi_service import ChiService
from services.laurent_service import LaurentService

logger = logging.getLogger(__name__)


def chi_torus(args) -> CommandResult:
    if args.file:
        polytopes = load_polytopes(args.file)
        inputs = [p.to_dict() for p in polytopes]
    elif args.system or args.poly:
        system = load_system(args.system, args.poly, args.names, args.seed, args.param)
        polytopes = [LaurentService.newton_polytope(p) for p in system.polys]
        inputs = [LaurentService.render(p, system.names) for p in system.polys]
    else:
        raise InputError("Give polytopes with --file or a system with --system/--poly")
    return make_result(args, ChiService.chi_torus_ci(polytopes), inputs)


def chi_affine(args) -> CommandResult:
    system = load_system(args.system, args.poly, args.names, args.seed, args.param)
    records = ChiService.stratum_table(system)
    inputs = [LaurentService.render(p, system.names) for p in system.polys]
    return make_result(
        args,
        sum(record.chi for record in records),
        inputs,
        breakdown=[record.to_dict() for record in records],
        seed=args.seed if args.system else None,
    )


def register(subparsers, common):
    parser = subparsers.add_parser("chi-torus", parents=[common],
                                   help="Euler characteristic of a generic complete intersection in the torus")
    parser.add_argument("--file", help="JSON {\"polytopes\": [...]} of Newton polytopes")
    add_system_arguments(parser)
    parser.set_defaults(handler=chi_torus, command_name="chi-torus")

    parser = subparsers.add_parser("chi-affine", parents=[common],
                                   help="Euler characteristic of a generic complete intersection in affine space")
    add_system_arguments(parser)
    parser.set_defaults(handler=chi_affine, command_name="chi-affine")
