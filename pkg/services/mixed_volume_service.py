import logging
from concurrent.futures import ThreadPoolExecutor
from math import factorial
from typing import Dict, List, Sequence, Tuple

from config.settings import settings
from core.exceptions import DataInconsistencyError, InputError
from core.logging_utils import get_structured_logger
from models.lattice import LatticePolytope
from models.laurent import PolySystem
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)


class MixedVolumeService:
    """Normalized mixed volumes and BKK root counts"""

    @staticmethod
    def validate_tuple(polytopes: Sequence[LatticePolytope]) -> int:
        """Check that the tuple has exactly d nonempty entries in ambient dimension d"""
        if not polytopes:
            raise InputError("Mixed volume of an empty tuple")

        n = polytopes[0].ambient_dim
        if len(polytopes) != n:
            raise InputError(f"Mixed volume needs exactly {n} polytopes in dimension {n}, got {len(polytopes)}")
        for i, polytope in enumerate(polytopes):
            if polytope.ambient_dim != n:
                raise InputError(f"Polytope {i} has ambient dimension {polytope.ambient_dim}, expected {n}")
            if polytope.is_empty:
                raise InputError(f"Polytope {i} is empty")
        return n

    @staticmethod
    def subset_sums(polytopes: Sequence[LatticePolytope]) -> List[Tuple[int, LatticePolytope]]:
        """
        Minkowski sums over every nonempty subset, keyed by bit mask.

        Each sum is the cached sum of the subset without its lowest index plus
        one more polytope, so every subset costs a single Minkowski addition.
        """
        sums: Dict[int, LatticePolytope] = {}
        for mask in range(1, 2 ** len(polytopes)):
            lowest = (mask & -mask).bit_length() - 1
            rest = mask & (mask - 1)
            if rest:
                sums[mask] = GeometryService.minkowski_sum(sums[rest], polytopes[lowest])
            else:
                sums[mask] = polytopes[lowest]
        return list(sums.items())

    @classmethod
    def mixed_volume_normalized(cls, polytopes: Sequence[LatticePolytope]) -> int:
        """
        n! V(K_1, ..., K_n) by inclusion-exclusion over Minkowski partial sums.

        Each subset S contributes (-1)^(n - |S|) vol(sum of K_i, i in S); with
        normalized volumes the signed sum is n! times the result.
        """
        n = cls.validate_tuple(polytopes)
        terms = cls.subset_sums(polytopes)

        def signed_volume(term: Tuple[int, LatticePolytope]) -> int:
            mask, polytope = term
            sign = -1 if (n - bin(mask).count("1")) % 2 else 1
            return sign * GeometryService.normalized_volume(polytope)

        if settings.is_parallel() and len(terms) > 1:
            with ThreadPoolExecutor(max_workers=settings.MAX_WORKERS) as executor:
                total = sum(executor.map(signed_volume, terms))
        else:
            total = sum(signed_volume(term) for term in terms)

        value, remainder = divmod(total, factorial(n))
        if remainder:
            raise DataInconsistencyError(f"Signed volume sum {total} is not divisible by {n}!")

        structured_logger.debug("Computed mixed volume", dim=n, subsets=len(terms), value=value)
        return value

    @classmethod
    def bkk_count(cls, system: PolySystem) -> int:
        """Generic number of solutions in the torus of a square Laurent system"""
        if len(system.polys) != system.num_vars:
            raise InputError(
                f"BKK count needs a square system, got {len(system.polys)} polynomials in {system.num_vars} variables"
            )
        polytopes = []
        for i, poly in enumerate(system.polys):
            if poly.is_zero:
                raise InputError(f"Polynomial {i} of the system has empty support")
            polytopes.append(LaurentService.newton_polytope(poly))
        return cls.mixed_volume_normalized(polytopes)
