import logging
from typing import List, Tuple

from cli.commands import make_result
from cli.inputs import parse_json_flag, read_json, validate
from core.exceptions import InputError
from schemas.command import CommandResult
from schemas.orbit import CatalogEntryOut, SectionInput, WeightSetJSON
from services.orbit_service import SL2_QUOTED_MU, OrbitService

logger = logging.getLogger(__name__)


def _weights(args) -> Tuple[List[List[int]], int]:
    if args.file:
        payload = validate(WeightSetJSON, read_json(args.file))
    elif args.weights:
        weights = parse_json_flag(args.weights, "--weights")
        rank = args.rank if args.rank is not None else (len(weights[0]) if weights else 0)
        payload = validate(WeightSetJSON, {"rank": rank, "weights": weights})
    else:
        raise InputError("Give weights with --file or --weights")
    return payload.weights, payload.rank


def degree(args) -> CommandResult:
    weights, rank = _weights(args)
    return make_result(args, OrbitService.torus_orbit_degree(weights, rank), {"rank": rank, "weights": weights})


def closed(args) -> CommandResult:
    weights, rank = _weights(args)
    return make_result(args, OrbitService.is_closed_orbit_embedding(weights, rank), {"rank": rank, "weights": weights})


def crit(args) -> CommandResult:
    weights, rank = _weights(args)
    return make_result(args, OrbitService.torus_crit_count(weights, rank), {"rank": rank, "weights": weights})


def section_chi(args) -> CommandResult:
    if args.id is not None:
        entry = OrbitService.catalog_lookup(args.id, args.n, args.m)
        value = OrbitService.catalog_section_chi(args.id, args.n, args.m)
        chi_x = OrbitService.catalog_orbit_chi(args.id, args.n, args.m)
        breakdown = [{"chi_orbit": chi_x, "orbit_dim": entry.orbit_dim, "degree": entry.invariant_degrees[0]}]
        return make_result(args, value, {"id": args.id, "params": entry.params}, breakdown=breakdown)

    if args.file:
        payload = validate(SectionInput, read_json(args.file))
    elif None not in (args.chi, args.dim, args.deg):
        payload = validate(SectionInput, {"chi": args.chi, "dim": args.dim, "deg": args.deg})
    else:
        raise InputError("Give --chi, --dim and --deg, a --file, or a catalog --id")
    value = OrbitService.section_chi(payload.chi, payload.dim, payload.deg)
    return make_result(args, value, payload.model_dump())


def _entry_out(entry) -> dict:
    return CatalogEntryOut(
        id=entry.id,
        group_label=entry.group_label,
        module_label=entry.module_label,
        module_dim=entry.module_dim,
        orbit_codim=entry.orbit_codim,
        orbit_dim=entry.orbit_dim,
        invariant_degrees=entry.invariant_degrees,
        closed_generic_orbits=entry.closed_generic_orbits,
        params=[f"{name}={value}" for name, value in sorted(entry.params.items())],
        isotropy_label=entry.isotropy_label,
    ).model_dump()


def catalog(args) -> CommandResult:
    if args.id is None:
        entries = OrbitService.catalog_list()
        return make_result(args, [_entry_out(e) for e in entries], {"catalog": "all"})
    entry = OrbitService.catalog_lookup(args.id, args.n, args.m)
    return make_result(args, _entry_out(entry), {"id": args.id, "n": args.n, "m": args.m})


def sl2(args) -> CommandResult:
    n = args.param
    if n is None:
        raise InputError("orbit sl2 needs --param n")
    deg = OrbitService.sl2_degree(n)
    chi = OrbitService.sl2_section_chi(n, seed=args.seed)
    # dim SL(2) = 3 and chi(SL(2)) = 0, so mu = (-1)^(3+1) (chi(section) - 0)
    mu = chi
    result = {"degree": deg, "section_chi": chi, "mu": mu}
    notes = [f"quoted mu {SL2_QUOTED_MU} differs from the section count for n > 1"]
    return make_result(args, result, {"n": n}, seed=args.seed, notes=notes)


def register(subparsers, common):
    parser = subparsers.add_parser("orbit", help="Orbit degrees, closedness and section Euler characteristics")
    actions = parser.add_subparsers(dest="action", required=True)

    for name, handler, help_text in (
        ("degree", degree, "Degree of a generic torus orbit"),
        ("closed", closed, "Closedness criterion for a torus orbit embedding"),
        ("crit", crit, "Critical points of a generic functional on a torus orbit"),
    ):
        sub = actions.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--file", help="Weight set JSON {\"rank\": r, \"weights\": [...]}")
        sub.add_argument("--weights", help="Weights as a JSON list")
        sub.add_argument("--rank", type=int, help="Torus rank for --weights")
        sub.set_defaults(handler=handler, command_name=f"orbit {name}")

    sub = actions.add_parser("section-chi", parents=[common], help="chi of a generic hyperplane section of an orbit")
    sub.add_argument("--chi", type=int, help="Euler characteristic of the orbit")
    sub.add_argument("--dim", type=int, help="Dimension of the orbit")
    sub.add_argument("--deg", type=int, help="Degree of the orbit")
    sub.add_argument("--file", help="JSON {\"chi\": .., \"dim\": .., \"deg\": ..}")
    add_catalog_arguments(sub)
    sub.set_defaults(handler=section_chi, command_name="orbit section-chi")

    sub = actions.add_parser("catalog", parents=[common], help="Spherical module catalog")
    add_catalog_arguments(sub)
    sub.set_defaults(handler=catalog, command_name="orbit catalog")

    sub = actions.add_parser("sl2", parents=[common], help="SL(2) embedded by V_n: degree, section chi and mu")
    sub.add_argument("--param", type=int, help="n")
    sub.set_defaults(handler=sl2, command_name="orbit sl2")


def add_catalog_arguments(parser):
    parser.add_argument("--id", type=int, help="Catalog entry id")
    parser.add_argument("--n", type=int, help="Catalog parameter n")
    parser.add_argument("--m", type=int, help="Catalog parameter m")
