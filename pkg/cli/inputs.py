"""Loading command inputs from JSON files and flags"""

import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ValidationError

from config.settings import settings
from core.exceptions import InputError
from models.intersection import IntersectionData
from models.laurent import LaurentPolynomial, PolySystem
from models.lattice import LatticePolytope
from schemas.chern import IntersectionDataJSON
from schemas.polynomial import GenericEntry, PolynomialJSON, SystemJSON
from schemas.polytope import PolytopeJSON, PolytopeTupleJSON
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService

logger = logging.getLogger(__name__)


def resolve_path(name: str) -> Path:
    """A path as given, or else the bundled sample of that name"""
    path = Path(name)
    if path.exists():
        return path
    bundled = settings.DATA_DIR / name
    if bundled.exists():
        logger.debug(f"Using bundled sample {bundled}")
        return bundled
    raise InputError(f"Input file {name} not found")


def read_json(name: str) -> Any:
    path = resolve_path(name)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e.msg} (line {e.lineno}, column {e.colno})")


def parse_json_flag(text: str, flag: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{flag} is not valid JSON: {e.msg}")


def validate(schema: type, data: Any) -> BaseModel:
    """Validate data against a pydantic schema, reporting failures as InputError"""
    try:
        return schema.model_validate(data)
    except ValidationError as e:
        raise InputError(f"Invalid {schema.__name__}: {e.errors()[0]['msg']}")


# -----------------------------------------------------------------------------
# Polytopes
# -----------------------------------------------------------------------------

def polytope_from_json(data: Any) -> LatticePolytope:
    payload = validate(PolytopeJSON, data)
    return GeometryService.hull(payload.points, payload.dim)


def load_polytope(file: Optional[str], points: Optional[str], dim: Optional[int]) -> LatticePolytope:
    if file:
        return polytope_from_json(read_json(file))
    if points:
        coords = parse_json_flag(points, "--points")
        if dim is None:
            dim = len(coords[0]) if coords else None
        return polytope_from_json({"dim": dim, "points": coords})
    raise InputError("Give a polytope with --file or --points")


def load_polytopes(file: str) -> List[LatticePolytope]:
    data = read_json(file)
    if isinstance(data, list):
        data = {"polytopes": data}
    payload = validate(PolytopeTupleJSON, data)
    return [GeometryService.hull(p.points, p.dim) for p in payload.polytopes]


# -----------------------------------------------------------------------------
# Polynomial systems
# -----------------------------------------------------------------------------

def _split_names(names: Optional[str]) -> Optional[List[str]]:
    if not names:
        return None
    return [name.strip() for name in names.split(",") if name.strip()]


def system_from_json(data: Any, seed: int, param: Optional[int] = None) -> PolySystem:
    """
    Build a system from its JSON form.

    Generic entries draw integer coefficients from a generator seeded with the
    run seed; a symbolic degree "n" takes the value of param.
    """
    payload = validate(SystemJSON, data)
    num_vars = payload.nvars or (len(payload.names) if payload.names else None)
    if num_vars is None:
        json_vars = [p.nvars for p in payload.polys if isinstance(p, PolynomialJSON)]
        texts = [p for p in payload.polys if isinstance(p, str)]
        if json_vars:
            num_vars = max(json_vars)
        elif texts:
            num_vars = LaurentService.parse_system(texts).num_vars
        else:
            raise InputError("A system of generic entries needs nvars or names")

    rng = np.random.default_rng(seed)
    polys: List[LaurentPolynomial] = []
    for entry in payload.polys:
        if isinstance(entry, str):
            polys.append(LaurentService.parse(entry, names=payload.names, num_vars=num_vars))
        elif isinstance(entry, PolynomialJSON):
            if entry.nvars != num_vars:
                raise InputError(f"Polynomial has {entry.nvars} variables, system has {num_vars}")
            polys.append(LaurentService.from_json(entry.model_dump()))
        elif isinstance(entry, GenericEntry):
            degree = entry.generic.degree
            if degree == "n":
                if param is None:
                    raise InputError("Generic degree 'n' needs --param")
                degree = param
            polys.append(LaurentService.generic_dense(
                num_vars, degree, rng,
                homogeneous=entry.generic.homogeneous,
                constant=entry.generic.constant,
            ))
    return PolySystem(num_vars, polys, payload.names)


def load_system(file: Optional[str], polys: Optional[Sequence[str]], names: Optional[str],
                seed: int, param: Optional[int] = None) -> PolySystem:
    if file:
        return system_from_json(read_json(file), seed, param)
    if polys:
        return LaurentService.parse_system(polys, names=_split_names(names))
    raise InputError("Give a system with --system or one --poly per equation")


def load_poly(text: str, names: Optional[str]) -> LaurentPolynomial:
    return LaurentService.parse(text, names=_split_names(names))


def parse_int_list(text: str, flag: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InputError(f"{flag} must be a comma separated list of integers, got {text!r}")


# -----------------------------------------------------------------------------
# Intersection data
# -----------------------------------------------------------------------------

def load_intersection_data(file: str, d: Optional[int] = None) -> IntersectionData:
    payload = validate(IntersectionDataJSON, read_json(file))
    return IntersectionData(
        payload.n, payload.deg_top, tuple(payload.coefficients()), d if d is not None else payload.d
    )
