import logging

from cli.commands import make_result
from cli.inputs import load_poly, load_polytope, load_polytopes, load_system
from schemas.command import CommandResult
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService
from services.mixed_volume_service import MixedVolumeService

logger = logging.getLogger(__name__)


def newton_polytope(args) -> CommandResult:
    poly = load_poly(args.poly, args.names)
    polytope = LaurentService.newton_polytope(poly)
    return make_result(args, polytope.to_dict(), {"poly": LaurentService.render(poly)})


def volume(args) -> CommandResult:
    polytope = load_polytope(args.file, args.points, args.dim)
    return make_result(args, GeometryService.normalized_volume(polytope), polytope.to_dict())


def mixed_volume(args) -> CommandResult:
    polytopes = load_polytopes(args.file)
    value = MixedVolumeService.mixed_volume_normalized(polytopes)
    breakdown = [
        {"subset": mask, "volume": GeometryService.normalized_volume(summand)}
        for mask, summand in MixedVolumeService.subset_sums(polytopes)
    ] if args.verbose else None
    return make_result(args, value, [p.to_dict() for p in polytopes], breakdown=breakdown)


def bkk(args) -> CommandResult:
    system = load_system(args.system, args.poly, args.names, args.seed, args.param)
    inputs = [LaurentService.render(p, system.names) for p in system.polys]
    return make_result(args, MixedVolumeService.bkk_count(system), inputs)


def register(subparsers, common):
    parser = subparsers.add_parser("newton-polytope", parents=[common], help="Newton polytope of a polynomial")
    parser.add_argument("--poly", required=True, help="Polynomial text")
    parser.add_argument("--names", help="Comma separated variable order")
    parser.set_defaults(handler=newton_polytope, command_name="newton-polytope")

    parser = subparsers.add_parser("volume", parents=[common], help="Normalized volume of a lattice polytope")
    parser.add_argument("--file", help="Polytope JSON {\"dim\": d, \"points\": [...]}")
    parser.add_argument("--points", help="Points as a JSON list")
    parser.add_argument("--dim", type=int, help="Ambient dimension for --points")
    parser.set_defaults(handler=volume, command_name="volume")

    parser = subparsers.add_parser("mixed-volume", parents=[common], help="Normalized mixed volume of n polytopes")
    parser.add_argument("--file", required=True, help="JSON {\"polytopes\": [...]}")
    parser.set_defaults(handler=mixed_volume, command_name="mixed-volume")

    parser = subparsers.add_parser("bkk", parents=[common], help="BKK root count of a square system")
    add_system_arguments(parser)
    parser.set_defaults(handler=bkk, command_name="bkk")


def add_system_arguments(parser):
    parser.add_argument("--system", help="System JSON file")
    parser.add_argument("--poly", action="append", help="Equation text, once per equation")
    parser.add_argument("--names", help="Comma separated variable order")
    parser.add_argument("--param", type=int, help="Value of the symbolic degree n")
