import logging

from cli.commands import make_result
from cli.commands.polytopes import add_system_arguments
from cli.inputs import load_system, parse_int_list, read_json, validate
from core.exceptions import InputError
from schemas.command import CommandResult
from schemas.crit import DetInput, QuadricInput, to_complex
from services.crit_service import CritService
from services.laurent_service import LaurentService

logger = logging.getLogger(__name__)


def quadric(args) -> CommandResult:
    if args.file:
        payload = validate(QuadricInput, read_json(args.file))
        f = [to_complex(v) for v in payload.f]
        report = CritService.quadric_crit(f, to_complex(payload.c), tol=args.tol)
        inputs, seed = payload.model_dump(), None
    elif args.n is not None:
        report = CritService.random_quadric_crit(args.n, seed=args.seed, tol=args.tol)
        inputs, seed = {"n": args.n}, args.seed
    else:
        raise InputError("Give a functional with --file or a dimension with --n")
    return make_result(args, report.model_dump(), inputs, seed=seed)


def det(args) -> CommandResult:
    if args.file:
        payload = validate(DetInput, read_json(args.file))
        F = [[to_complex(v) for v in row] for row in payload.F]
        report = CritService.det_crit(F, to_complex(payload.c), tol=args.tol)
        inputs, seed = payload.model_dump(), None
    elif args.n is not None:
        report = CritService.random_det_crit(args.n, seed=args.seed, tol=args.tol)
        inputs, seed = {"n": args.n}, args.seed
    else:
        raise InputError("Give a matrix with --file or a size with --n")
    return make_result(args, report.model_dump(), inputs, seed=seed)


def uni(args) -> CommandResult:
    support = parse_int_list(args.support, "--support")
    report = CritService.univariate_crit_report(support, seed=args.seed)
    return make_result(args, report.model_dump(), {"support": sorted(set(support))}, seed=args.seed)


def biv(args) -> CommandResult:
    system = load_system(args.system, args.poly, args.names, args.seed, args.param)
    report = CritService.bivariate_root_report(system, seed=args.seed, tol=args.tol)
    inputs = [LaurentService.render(p, system.names) for p in system.polys]
    return make_result(args, report.model_dump(), inputs, seed=args.seed)


def register(subparsers, common):
    parser = subparsers.add_parser("crit", help="Numeric critical-point and root-count verifications")
    actions = parser.add_subparsers(dest="action", required=True)

    sub = actions.add_parser("quadric", parents=[common], help="Critical points of a functional on sum x_i^2 = c")
    sub.add_argument("--file", help="JSON {\"f\": [...], \"c\": ..}")
    sub.add_argument("--n", type=int, help="Dimension of a seeded random functional")
    sub.set_defaults(handler=quadric, command_name="crit quadric")

    sub = actions.add_parser("det", parents=[common], help="Critical points of trace(F M) on det M = c")
    sub.add_argument("--file", help="JSON {\"F\": [[...]], \"c\": ..}")
    sub.add_argument("--n", type=int, help="Size of a seeded random matrix")
    sub.set_defaults(handler=det, command_name="crit det")

    sub = actions.add_parser("uni", parents=[common], help="Torus critical points of a generic univariate F")
    sub.add_argument("--support", required=True, help="Comma separated exponents, e.g. --support=-1,0,2")
    sub.set_defaults(handler=uni, command_name="crit uni")

    sub = actions.add_parser("biv", parents=[common], help="Torus roots of a generic bivariate system")
    add_system_arguments(sub)
    sub.set_defaults(handler=biv, command_name="crit biv")
