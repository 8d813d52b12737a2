import logging
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from core.exceptions import DataInconsistencyError, DomainError, InputError, PreconditionError
from core.logging_utils import get_structured_logger
from core.validators import validate_and_clean_points, validate_dimension
from models.catalog import CATALOG, CATALOG_BY_ID, CartanType, CatalogEntry, CatalogRow
from models.lattice import LatticePolytope, unit_simplex_points
from services.chi_service import ChiService
from services.geometry_service import GeometryService
from services.mixed_volume_service import MixedVolumeService

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)

_EXCEPTIONAL_WEYL_ORDERS = {
    ("G", 2): 12,
    ("F", 4): 1152,
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
}

# Reported alongside sl2 results; disagrees with the section formula beyond n = 1
SL2_QUOTED_MU = "4n^3 - 6n^2 + 4n"


def weyl_group_order(letter: str, rank: int) -> int:
    """Order of the Weyl group of a simple Cartan type (t: central torus, trivial group)"""
    if rank < 0:
        raise InputError(f"Negative rank {rank} for type {letter}")
    if letter == "t" or rank == 0:
        return 1
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if (letter, rank) in _EXCEPTIONAL_WEYL_ORDERS:
        return _EXCEPTIONAL_WEYL_ORDERS[(letter, rank)]
    raise InputError(f"Unknown Cartan type {letter}_{rank}")


def _evaluate(formula: str, params: Dict[str, int]) -> int:
    value = sympy.sympify(formula).subs({sympy.Symbol(k): v for k, v in params.items()})
    if not value.is_integer:
        raise InputError(f"Formula {formula!r} is not an integer at {params}")
    return int(value)


class OrbitService:
    """Degrees, closedness and section Euler characteristics of orbits"""

    # -------------------------------------------------------------------------
    # Torus orbits
    # -------------------------------------------------------------------------

    @staticmethod
    def weight_hull(weights: Sequence[Sequence[int]], rank: int) -> LatticePolytope:
        validate_dimension(rank, 'rank')
        cleaned = validate_and_clean_points(weights, rank)
        if not cleaned:
            raise InputError("A weight set needs at least one weight")
        return GeometryService.hull(cleaned, rank)

    @classmethod
    def torus_orbit_degree(cls, weights: Sequence[Sequence[int]], rank: int) -> int:
        """Degree of a generic orbit: normalized volume of the weight hull"""
        hull = cls.weight_hull(weights, rank)
        if not hull.is_full_dimensional:
            raise DomainError(
                f"Weight hull has dimension {hull.affine_dim} < {rank}; the generic orbit is not {rank}-dimensional"
            )
        return GeometryService.normalized_volume(hull)

    @classmethod
    def torus_crit_count(cls, weights: Sequence[Sequence[int]], rank: int) -> int:
        """
        Number of critical points of a generic functional on a generic torus orbit.

        The critical equations x_i dF/dx_i = 0 have Newton polytopes contained in
        the shifted hulls hull - e_i; their mixed volume is returned and must
        agree with the orbit degree.
        """
        hull = cls.weight_hull(weights, rank)
        if not GeometryService.contains_origin_interior(hull):
            raise PreconditionError("Origin is not interior to the weight hull; translate the weights first")

        shifted = []
        for i in range(rank):
            unit = [0] * rank
            unit[i] = -1
            shifted.append(GeometryService.translate(hull, unit))
        count = MixedVolumeService.mixed_volume_normalized(shifted)

        degree = GeometryService.normalized_volume(hull)
        if count != degree:
            structured_logger.error("Critical count differs from orbit degree", count=count, degree=degree)
            raise DataInconsistencyError(f"Mixed volume {count} of shifted hulls differs from degree {degree}")
        return count

    @staticmethod
    def is_closed_orbit_embedding(weights: Sequence[Sequence[int]], rank: int) -> bool:
        """Closedness criterion: origin interior to the convex hull of the weights"""
        validate_dimension(rank, 'rank')
        cleaned = validate_and_clean_points(weights, rank)
        if not cleaned:
            return False
        return GeometryService.contains_origin_interior(GeometryService.hull(cleaned, rank))

    # -------------------------------------------------------------------------
    # Euler characteristics
    # -------------------------------------------------------------------------

    @staticmethod
    def section_chi(chi_x: int, dim_x: int, degree: int) -> int:
        """chi(f^-1(c) and X) = chi(X) + (-1)^(dim X + 1) deg X"""
        validate_dimension(dim_x, 'dim_x')
        validate_dimension(degree, 'degree')
        return chi_x + (-1) ** (dim_x + 1) * degree

    @staticmethod
    def chi_reductive_group() -> int:
        """
        Euler characteristic of a complex reductive group.

        G retracts onto its maximal compact subgroup K, and a compact Lie group of
        positive dimension carries a nowhere-vanishing vector field (left
        translate of a nonzero Lie algebra vector), so chi(G) = chi(K) = 0.
        """
        return 0

    @classmethod
    def reductive_section_chi(cls, dim: int, degree: int) -> int:
        """Section Euler characteristic of a closed reductive group embedding"""
        return cls.section_chi(cls.chi_reductive_group(), dim, degree)

    @staticmethod
    def chi_homogeneous(rank_g: int, rank_h: int, weyl_g: int, weyl_h: int) -> int:
        """chi(G/H) = |W_G| / |W_H| at equal rank, 0 otherwise"""
        for name, value in (("rank_g", rank_g), ("rank_h", rank_h)):
            validate_dimension(value, name, minimum=0)
        for name, value in (("weyl_g", weyl_g), ("weyl_h", weyl_h)):
            validate_dimension(value, name)
        if rank_h > rank_g:
            raise InputError(f"Subgroup rank {rank_h} exceeds group rank {rank_g}")
        if rank_h < rank_g:
            return 0
        if weyl_g % weyl_h:
            raise InputError(f"Weyl order {weyl_h} does not divide {weyl_g}")
        return weyl_g // weyl_h

    # -------------------------------------------------------------------------
    # Catalog
    # -------------------------------------------------------------------------

    @staticmethod
    def _row(entry_id: int) -> CatalogRow:
        row = CATALOG_BY_ID.get(entry_id)
        if row is None:
            raise InputError(f"Unknown catalog id {entry_id}; valid ids are 0-{len(CATALOG) - 1}")
        return row

    @staticmethod
    def _resolve_params(row: CatalogRow, n: Optional[int], m: Optional[int]) -> Dict[str, int]:
        given = {"n": n, "m": m}
        params = {}
        for name, minimum in row.params.items():
            value = given[name] if given[name] is not None else minimum
            if value < minimum:
                raise InputError(f"Entry {row.id} needs {name} >= {minimum}, got {value}")
            params[name] = value
        if row.constraint and not bool(sympy.sympify(row.constraint).subs(
                {sympy.Symbol(k): v for k, v in params.items()})):
            raise InputError(f"Entry {row.id} requires {row.constraint}, got {params}")
        return params

    @staticmethod
    def _type_data(types: Sequence[CartanType], params: Dict[str, int]) -> Tuple[int, int]:
        """Total rank and Weyl group order of a product of Cartan types"""
        rank, weyl = 0, 1
        for letter, formula in types:
            r = _evaluate(formula, params)
            rank += r
            weyl *= weyl_group_order(letter, r)
        return rank, weyl

    @classmethod
    def catalog_list(cls) -> List[CatalogEntry]:
        """Every entry evaluated at its smallest admissible parameters"""
        return [cls.catalog_lookup(row.id) for row in CATALOG]

    @classmethod
    def catalog_lookup(cls, entry_id: int, n: Optional[int] = None, m: Optional[int] = None) -> CatalogEntry:
        row = cls._row(entry_id)
        params = cls._resolve_params(row, n, m)
        return CatalogEntry(
            id=row.id,
            group_label=row.group_label,
            module_label=row.module_label,
            module_dim=_evaluate(row.module_dim, params),
            orbit_codim=row.orbit_codim,
            invariant_degrees=[_evaluate(d, params) for d in row.invariant_degrees],
            closed_generic_orbits=row.closed_generic_orbits,
            params=params,
            isotropy_label=row.isotropy_label,
        )

    @classmethod
    def catalog_orbit_chi(cls, entry_id: int, n: Optional[int] = None, m: Optional[int] = None) -> int:
        """
        Euler characteristic of a generic orbit G/H.

        Uses the tabulated reductive isotropy type; 0 when the isotropy type is
        not tabulated or has a unipotent radical.
        """
        row = cls._row(entry_id)
        params = cls._resolve_params(row, n, m)
        if row.isotropy_types is None or row.isotropy_unipotent:
            return 0
        rank_g, weyl_g = cls._type_data(row.group_types, params)
        rank_h, weyl_h = cls._type_data(row.isotropy_types, params)
        return cls.chi_homogeneous(rank_g, rank_h, weyl_g, weyl_h)

    @classmethod
    def catalog_section_chi(cls, entry_id: int, n: Optional[int] = None, m: Optional[int] = None) -> int:
        """
        Section Euler characteristic of a generic orbit of a catalog entry.

        The orbit term comes from catalog_orbit_chi rather than the reductive
        value 0. Equal-rank isotropy changes the result: entry 7 (SO(2n+1) on
        its standard module) has orbits SO(2n+1)/SO(2n), even-dimensional
        spheres with chi 2, so it returns 2 - 2 = 0 instead of -2. Entries 6
        and 23 keep their reductive values.
        """
        entry = cls.catalog_lookup(entry_id, n, m)
        if not entry.closed_generic_orbits:
            raise DomainError(f"Generic orbits of entry {entry_id} are not closed")
        if len(entry.invariant_degrees) != 1:
            raise DomainError(
                f"Entry {entry_id} has {len(entry.invariant_degrees) or 'no known'} invariant(s); "
                f"the generic orbit degree is not determined by a single invariant"
            )
        if entry.orbit_dim < 1:
            raise DomainError(f"Generic orbits of entry {entry_id} are points")

        chi_x = cls.catalog_orbit_chi(entry_id, n, m)
        result = cls.section_chi(chi_x, entry.orbit_dim, entry.invariant_degrees[0])
        structured_logger.debug(
            "Catalog section chi",
            id=entry_id,
            params=entry.params,
            chi_orbit=chi_x,
            orbit_dim=entry.orbit_dim,
            degree=entry.invariant_degrees[0],
            value=result
        )
        return result

    # -------------------------------------------------------------------------
    # SL(2) worked example
    # -------------------------------------------------------------------------

    @staticmethod
    def sl2_weights(n: int) -> List[Tuple[int]]:
        """Weights -n, -n+2, ..., n of the irreducible representation V_n"""
        validate_dimension(n, 'n')
        return [(w,) for w in range(-n, n + 1, 2)]

    @staticmethod
    def sl2_degree(n: int) -> int:
        """Degree of the image of SL(2) in M(n+1): mixed volume of (2D, nD, nD, nD) for the unit 4-simplex D"""
        validate_dimension(n, 'n')
        simplex = GeometryService.hull(unit_simplex_points(4), 4)
        quadric = GeometryService.dilate(simplex, 2)
        section = GeometryService.dilate(simplex, n)
        return MixedVolumeService.mixed_volume_normalized([quadric, section, section, section])

    @classmethod
    def sl2_section_chi(cls, n: int, seed: int = 0) -> int:
        """chi of a generic hyperplane section of SL(2) embedded by V_n, by coordinate strata"""
        return ChiService.chi_affine_ci(ChiService.sl2_section_system(n, seed=seed))
