import logging
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from core.exceptions import DataInconsistencyError, DomainError, InputError
from core.logging_utils import get_structured_logger
from models.intersection import IntersectionData, RingElement

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)


def _integral(value: Fraction, what: str) -> int:
    if Fraction(value).denominator != 1:
        raise DataInconsistencyError(f"{what} evaluates to {value}, which is not an integer")
    return int(value)


class ChernService:
    """Euler characteristics of divisors and their affine parts from Chern classes"""

    # -------------------------------------------------------------------------
    # Sample manifolds
    # -------------------------------------------------------------------------

    @staticmethod
    def projective_space(n: int, d: int = 1) -> IntersectionData:
        """P^n: c(TM) = (1 + h)^(n+1), h^n = 1"""
        return IntersectionData(n, 1, tuple(comb(n + 1, i) for i in range(n + 1)), d)

    @staticmethod
    def quadric_surface(d: int = 1) -> IntersectionData:
        """Smooth quadric in P^3 with h the hyperplane class: c = 1 + 2h + 2h^2, h^2 = 2"""
        return IntersectionData(2, 2, (1, 2, 2), d)

    # -------------------------------------------------------------------------
    # Ring computations
    # -------------------------------------------------------------------------

    @staticmethod
    def divisor_factor(n: int, d: int) -> RingElement:
        """D (1 + D)^-1 for D = d h"""
        divisor = RingElement.h(n, d)
        return divisor * (RingElement.unit(n) + divisor).inverse()

    @classmethod
    def chern_of_divisor(cls, data: IntersectionData) -> RingElement:
        """c(TM) D (1 + D)^-1, whose top-degree part integrates c(TD) over D"""
        return data.total_chern_class() * cls.divisor_factor(data.n, data.d)

    @classmethod
    def complete_intersection(cls, data: IntersectionData, degrees: Sequence[int]) -> int:
        """chi of a transversal intersection of divisors d_1 h, ..., d_k h"""
        if not degrees:
            return data.chi_m
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 1 for e in degrees):
            raise InputError(f"Divisor degrees must be positive integers, got {list(degrees)}")
        if len(degrees) > data.n:
            raise DomainError(f"{len(degrees)} divisors on a {data.n}-dimensional manifold")
        element = data.total_chern_class()
        for e in degrees:
            element = element * cls.divisor_factor(data.n, e)
        return _integral(element.evaluate(data.deg_top), f"chi of the intersection of {list(degrees)}")

    # -------------------------------------------------------------------------
    # Euler characteristics
    # -------------------------------------------------------------------------

    @classmethod
    def chi_divisor(cls, data: IntersectionData) -> int:
        return _integral(cls.chern_of_divisor(data).evaluate(data.deg_top), "chi(D)")

    @staticmethod
    def chi_divisor_by_sum(data: IntersectionData) -> int:
        """sum over i < n of (-1)^(n-i+1) c_i(M) D^(n-i)"""
        n, d = data.n, data.d
        total = sum(
            (-1) ** (n - i + 1) * data.chern_coeffs[i] * d ** (n - i)
            for i in range(n)
        )
        return _integral(total * data.deg_top, "chi(D)")

    @staticmethod
    def chi_two_divisors(data: IntersectionData, d1: int, d2: int) -> int:
        """sum over i, j >= 1 with i + j <= n of (-1)^(i+j) D1^i D2^j c_(n-i-j)(M)"""
        n = data.n
        if n < 2:
            raise DomainError("Two divisors need a manifold of dimension at least 2")
        if d1 < 1 or d2 < 1:
            raise InputError(f"Divisor degrees must be positive, got {d1}, {d2}")
        total = Fraction(0)
        for i in range(1, n):
            for j in range(1, n - i + 1):
                total += (-1) ** (i + j) * d1 ** i * d2 ** j * data.chern_coeffs[n - i - j]
        return _integral(total * data.deg_top, f"chi(D1 D2) for d = {d1}, {d2}")

    @classmethod
    def chi_affine_divisor(cls, data: IntersectionData, infinity_degree: Optional[int] = None) -> int:
        """
        chi(D minus the hyperplane at infinity) = chi(D) - chi(D . H).

        H = e h with e = infinity_degree, defaulting to d (H in the class of D).
        """
        if data.n < 2:
            raise DomainError("The affine part of a divisor needs dimension at least 2")
        e = data.d if infinity_degree is None else infinity_degree
        return cls.chi_divisor(data) - cls.chi_two_divisors(data, data.d, e)

    @classmethod
    def mu_from_chern(cls, data: IntersectionData, chi_m: Optional[int] = None,
                      paper_sign: bool = False) -> int:
        """
        Critical points of a generic linear functional on M minus D.

        (-1)^n (chi(M) - 2 chi(D) + chi(D^2)); paper_sign switches the prefactor
        to (-1)^(n+1), which gives -2 on the quadric surface.
        """
        if chi_m is None:
            chi_m = data.chi_m
        elif chi_m != data.chi_m:
            raise DataInconsistencyError(f"chi(M) = {chi_m} disagrees with gamma_n * deg_top = {data.chi_m}")
        n = data.n
        bracket = chi_m - 2 * cls.chi_divisor(data) + cls.chi_two_divisors(data, data.d, data.d)
        sign = (-1) ** (n + 1) if paper_sign else (-1) ** n
        mu = sign * bracket
        if mu < 0 and not paper_sign:
            structured_logger.warning("Negative critical point count", data=data.to_dict(), mu=mu)
        return mu
