import logging

from cli.commands import make_result
from cli.inputs import load_intersection_data
from schemas.command import CommandResult
from services.chern_service import ChernService

logger = logging.getLogger(__name__)


def chi_d(args) -> CommandResult:
    data = load_intersection_data(args.file, args.d)
    value = ChernService.chi_divisor(data)
    breakdown = [{"c(TD)": [str(c) for c in ChernService.chern_of_divisor(data).coefficient_list()]}]
    return make_result(args, value, data.to_dict(), breakdown=breakdown)


def chi_affine(args) -> CommandResult:
    data = load_intersection_data(args.file, args.d)
    value = ChernService.chi_affine_divisor(data, infinity_degree=args.infinity_degree)
    e = data.d if args.infinity_degree is None else args.infinity_degree
    breakdown = [{"chi_D": ChernService.chi_divisor(data), "chi_D_H": ChernService.chi_two_divisors(data, data.d, e)}]
    return make_result(args, value, {**data.to_dict(), "infinity_degree": e}, breakdown=breakdown)


def mu(args) -> CommandResult:
    data = load_intersection_data(args.file, args.d)
    value = ChernService.mu_from_chern(data)
    notes = ["sign (-1)^n; --paper-sign also reports the (-1)^(n+1) convention"]
    result = value
    if args.paper_sign:
        result = {"mu": value, "mu_paper_sign": ChernService.mu_from_chern(data, paper_sign=True)}
    return make_result(args, result, data.to_dict(), notes=notes)


def register(subparsers, common):
    parser = subparsers.add_parser("chern", help="Euler characteristics from Chern classes")
    actions = parser.add_subparsers(dest="action", required=True)

    for name, handler, help_text in (
        ("chi-d", chi_d, "chi of a smooth divisor D = d h"),
        ("chi-affine", chi_affine, "chi of the affine part of D"),
        ("mu", mu, "Critical points of a generic functional on M minus D"),
    ):
        sub = actions.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--file", required=True, help="JSON {\"n\": .., \"deg_top\": .., \"chern\": [...], \"d\": ..}")
        sub.add_argument("--d", type=int, help="Override the divisor degree d")
        if name == "chi-affine":
            sub.add_argument("--infinity-degree", type=int, help="Class e h of the hyperplane at infinity (default d)")
        sub.set_defaults(handler=handler, command_name=f"chern {name}")
