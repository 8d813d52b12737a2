import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from core.constants import (
    STRATUM_EMPTY_CONSTANT,
    STRATUM_EMPTY_MONOMIAL,
    STRATUM_EMPTY_OVERDETERMINED,
    STRATUM_TORUS,
)
from core.exceptions import DataInconsistencyError, DomainError, GenericityError, InputError
from core.logging_utils import get_structured_logger
from models.laurent import PolySystem
from models.lattice import LatticePolytope
from models.series import ChiSeries
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService
from services.mixed_volume_service import MixedVolumeService

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)

SL2_NAMES = ("a", "b", "c", "d")
SL2_QUADRIC = "a^2 + b^2 + c^2 + d^2 - 1"


@dataclass
class StratumRecord:
    """One coordinate stratum of an affine complete intersection"""
    zero_set: Tuple[str, ...]
    remaining_dim: int
    status: str
    chi: int

    def to_dict(self) -> Dict[str, object]:
        data = asdict(self)
        data["zero_set"] = list(self.zero_set)
        return data


class ChiService:
    """Euler characteristics of generic complete intersections"""

    # -------------------------------------------------------------------------
    # Torus
    # -------------------------------------------------------------------------

    @staticmethod
    def evaluate_series(series: ChiSeries, polytopes: Sequence[LatticePolytope]) -> Fraction:
        """
        Evaluate the degree-n part of a series on polytopes in R^n.

        A monomial prod x_i^(n_i) of total degree n maps to the normalized mixed
        volume with Delta_i repeated n_i times; other degrees contribute 0.
        """
        if len(polytopes) != series.num_symbols:
            raise InputError(f"{len(polytopes)} polytopes for a series in {series.num_symbols} symbols")
        if not polytopes:
            raise InputError("No polytopes to evaluate on")
        n = polytopes[0].ambient_dim
        if any(p.ambient_dim != n for p in polytopes):
            raise InputError("Polytopes of a series evaluation must share the ambient dimension")

        total = Fraction(0)
        for monomial, coefficient in series.items():
            if sum(monomial) != n:
                continue
            repeated = [polytopes[i] for i, power in enumerate(monomial) for _ in range(power)]
            total += coefficient * MixedVolumeService.mixed_volume_normalized(repeated)
        return total

    @classmethod
    def chi_torus_ci(cls, polytopes: Sequence[LatticePolytope]) -> int:
        """chi of a generic complete intersection in the torus: degree-n part of prod Delta_i (1 + Delta_i)^-1"""
        k = len(polytopes)
        if k == 0:
            raise InputError("chi_torus_ci needs at least one polytope")
        n = polytopes[0].ambient_dim
        if any(p.ambient_dim != n for p in polytopes):
            raise InputError("All polytopes must share the ambient dimension")
        if k > n:
            raise DomainError(f"{k} generic equations in {n} torus variables define the empty set")
        if any(p.is_empty for p in polytopes):
            raise DomainError("chi_torus_ci is undefined for an empty Newton polytope")

        value = cls.evaluate_series(ChiSeries.complete_intersection(k, n), polytopes)
        if value.denominator != 1:
            raise DataInconsistencyError(f"Series evaluation {value} is not an integer")
        return int(value)

    @staticmethod
    def chi_hypersurface_torus(polytope: LatticePolytope) -> int:
        """(-1)^(n-1) times the normalized volume, the k = 1 case"""
        n = polytope.ambient_dim
        return (-1) ** (n - 1) * GeometryService.normalized_volume(polytope)

    # -------------------------------------------------------------------------
    # Affine space by coordinate strata
    # -------------------------------------------------------------------------

    @classmethod
    def _stratum(cls, system: PolySystem, zeroed: Tuple[int, ...]) -> StratumRecord:
        names = tuple(system.names[i] for i in zeroed)
        remaining = system.num_vars - len(zeroed)
        k = len(system.polys)

        if remaining == 0:
            constants = LaurentService.constant_terms(system)
            if any(c != 0 for c in constants):
                return StratumRecord(names, 0, STRATUM_EMPTY_CONSTANT, 0)
            raise GenericityError("Every equation vanishes identically at the origin")

        restricted = LaurentService.restrict_to_stratum(system, zeroed)
        if any(p.is_constant for p in restricted.polys):
            return StratumRecord(names, remaining, STRATUM_EMPTY_CONSTANT, 0)
        for i, poly in enumerate(restricted.polys):
            if poly.is_zero:
                raise GenericityError(
                    f"Equation {i} vanishes identically on the stratum {list(names)}; the system is not generic"
                )
        if k > remaining:
            return StratumRecord(names, remaining, STRATUM_EMPTY_OVERDETERMINED, 0)
        polytopes = [LaurentService.newton_polytope(p) for p in restricted.polys]
        if any(p.is_point for p in polytopes):
            return StratumRecord(names, remaining, STRATUM_EMPTY_MONOMIAL, 0)
        return StratumRecord(names, remaining, STRATUM_TORUS, cls.chi_torus_ci(polytopes))

    @classmethod
    def stratum_table(cls, system: PolySystem) -> List[StratumRecord]:
        """Per-stratum records, ordered by number of zeroed variables then lexicographically"""
        n = system.num_vars
        if len(system.polys) > n:
            raise DomainError(f"{len(system.polys)} equations in {n} variables")
        LaurentService.check_affine_chart(system, range(n))

        subsets = [s for size in range(n + 1) for s in combinations(range(n), size)]
        if settings.is_parallel() and len(subsets) > 1:
            with ThreadPoolExecutor(max_workers=settings.MAX_WORKERS) as executor:
                records = list(executor.map(lambda s: cls._stratum(system, s), subsets))
        else:
            records = [cls._stratum(system, s) for s in subsets]

        structured_logger.debug(
            "Computed stratum table",
            num_vars=n,
            equations=len(system.polys),
            values=[r.chi for r in records]
        )
        return records

    @classmethod
    def chi_affine_ci(cls, system: PolySystem) -> int:
        """chi of a generic complete intersection in affine space, summed over coordinate strata"""
        return sum(record.chi for record in cls.stratum_table(system))

    # -------------------------------------------------------------------------
    # Worked example
    # -------------------------------------------------------------------------

    @staticmethod
    def sl2_section_system(n: int, seed: int = 0, rng: Optional[np.random.Generator] = None) -> PolySystem:
        """The quadric a^2+b^2+c^2+d^2-1 together with a generic homogeneous degree-n P minus a constant"""
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InputError(f"n must be a positive integer, got {n}")
        rng = rng if rng is not None else np.random.default_rng(seed)
        quadric = LaurentService.parse(SL2_QUADRIC, names=SL2_NAMES)
        section = LaurentService.generic_dense(4, n, rng, homogeneous=True, constant=True)
        return PolySystem(4, [quadric, section], SL2_NAMES)
