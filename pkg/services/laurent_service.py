import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from core.exceptions import DomainError, InputError
from core.logging_utils import get_structured_logger
from models.laurent import Coefficient, Exponent, LaurentPolynomial, PolySystem, default_names
from models.lattice import LatticePolytope
from schemas.polynomial import PolynomialJSON, TermJSON
from services import laurent_parser
from services.geometry_service import GeometryService

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)

# Range of generic integer coefficients in the symbolic pipeline
GENERIC_COEFFICIENT_BOUND = 97


def _render_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class LaurentService:
    """Parsing, rendering and manipulation of Laurent polynomials and systems"""

    # -------------------------------------------------------------------------
    # Text and JSON forms
    # -------------------------------------------------------------------------

    @staticmethod
    def parse(text: str, names: Optional[Sequence[str]] = None, num_vars: Optional[int] = None) -> LaurentPolynomial:
        return laurent_parser.parse(text, names=names, num_vars=num_vars)

    @staticmethod
    def parse_system(texts: Sequence[str], names: Optional[Sequence[str]] = None,
                     num_vars: Optional[int] = None) -> PolySystem:
        return laurent_parser.parse_system(texts, names=names, num_vars=num_vars)

    @staticmethod
    def render(poly: LaurentPolynomial, names: Optional[Sequence[str]] = None) -> str:
        """Canonical text: terms by descending exponent vector, '0' for the zero polynomial"""
        if poly.is_numeric:
            raise InputError("Only exact polynomials have a canonical text form")
        names = list(names) if names is not None else list(default_names(poly.num_vars))
        if len(names) != poly.num_vars:
            raise InputError(f"{len(names)} names for {poly.num_vars} variables")
        if poly.is_zero:
            return "0"

        pieces = []
        for exponent, coefficient in poly.items():
            factors = []
            for name, power in zip(names, exponent):
                if power == 1:
                    factors.append(name)
                elif power != 0:
                    factors.append(f"{name}^{power}")

            magnitude = abs(coefficient)
            if not factors:
                body = _render_coefficient(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_render_coefficient(magnitude)] + factors)

            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f"{'-' if coefficient < 0 else '+'} {body}")
        return " ".join(pieces)

    @staticmethod
    def to_json(poly: LaurentPolynomial) -> Dict[str, object]:
        """JSON form {"nvars": n, "terms": [{"exp": [...], "num": "...", "den": "..."}]}"""
        if poly.is_numeric:
            raise InputError("Only exact polynomials have a JSON form")
        terms = [
            TermJSON(exp=list(exponent), num=str(c.numerator), den=str(c.denominator))
            for exponent, c in poly.items()
        ]
        return PolynomialJSON(nvars=poly.num_vars, terms=terms).model_dump()

    @staticmethod
    def from_json(data: Dict[str, object]) -> LaurentPolynomial:
        payload = PolynomialJSON(**data)
        terms: Dict[Exponent, Fraction] = {}
        for term in payload.terms:
            exponent = tuple(term.exp)
            terms[exponent] = terms.get(exponent, Fraction(0)) + Fraction(int(term.num), int(term.den))
        return LaurentPolynomial(payload.nvars, terms)

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    @staticmethod
    def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
        return p + q

    @staticmethod
    def multiply(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
        return p * q

    @staticmethod
    def scale(p: LaurentPolynomial, factor: Coefficient) -> LaurentPolynomial:
        return p.scale(factor)

    @staticmethod
    def derivative(p: LaurentPolynomial, index: int) -> LaurentPolynomial:
        """Exact partial derivative in variable index (0-based)"""
        if not 0 <= index < p.num_vars:
            raise InputError(f"Variable index {index} out of range for {p.num_vars} variables")
        terms = {}
        for exponent, coefficient in p.items():
            power = exponent[index]
            if power == 0:
                continue
            shifted = exponent[:index] + (power - 1,) + exponent[index + 1:]
            terms[shifted] = coefficient * power
        return LaurentPolynomial(p.num_vars, terms)

    # -------------------------------------------------------------------------
    # Polytopes and strata
    # -------------------------------------------------------------------------

    @staticmethod
    def newton_polytope(p: LaurentPolynomial) -> LatticePolytope:
        """Hull of the exponent vectors; the empty polytope for the zero polynomial"""
        return GeometryService.hull(p.support, p.num_vars)

    @classmethod
    def support_shift_partials(cls, p: LaurentPolynomial) -> List[LatticePolytope]:
        """Newton polytope of each partial derivative (term a contributes a - e_i unless a_i = 0)"""
        return [cls.newton_polytope(cls.derivative(p, i)) for i in range(p.num_vars)]

    @staticmethod
    def check_affine_chart(system: PolySystem, indices: Iterable[int]):
        """Raise DomainError when a polynomial has a negative exponent on one of the given variables"""
        for i, poly in enumerate(system.polys):
            for exponent, _ in poly.items():
                for index in indices:
                    if exponent[index] < 0:
                        raise DomainError(
                            f"Polynomial {i} has negative exponent on {system.names[index]}; "
                            f"the coordinate hyperplane is outside its domain"
                        )

    @classmethod
    def restrict_to_stratum(cls, system: PolySystem, zero_set: Iterable[int]) -> PolySystem:
        """
        Set the variables in zero_set to zero.

        Terms with a positive exponent on a zeroed variable vanish; surviving
        exponent vectors are projected to the remaining coordinates.
        """
        zeroed = sorted(set(zero_set))
        for index in zeroed:
            if not 0 <= index < system.num_vars:
                raise InputError(f"Variable index {index} out of range for {system.num_vars} variables")
        if not zeroed:
            return system
        if len(zeroed) == system.num_vars:
            raise DomainError("Restriction to the origin leaves no variables; use constant_terms")

        cls.check_affine_chart(system, zeroed)
        keep = [i for i in range(system.num_vars) if i not in zeroed]
        polys = []
        for poly in system.polys:
            terms = {}
            for exponent, coefficient in poly.items():
                if any(exponent[i] > 0 for i in zeroed):
                    continue
                terms[tuple(exponent[i] for i in keep)] = coefficient
            polys.append(LaurentPolynomial(len(keep), terms))
        return PolySystem(len(keep), polys, [system.names[i] for i in keep])

    @classmethod
    def constant_terms(cls, system: PolySystem) -> List[Coefficient]:
        """Values of the system at the origin (every variable zeroed)"""
        cls.check_affine_chart(system, range(system.num_vars))
        zero = tuple([0] * system.num_vars)
        return [poly.coefficient(zero) for poly in system.polys]

    # -------------------------------------------------------------------------
    # Generic coefficients
    # -------------------------------------------------------------------------

    @staticmethod
    def generic_polynomial(support: Iterable[Sequence[int]], num_vars: int,
                           rng: np.random.Generator) -> LaurentPolynomial:
        """Seeded nonzero integer coefficients on a fixed support"""
        terms = {}
        for exponent in sorted({tuple(e) for e in support}):
            magnitude = int(rng.integers(1, GENERIC_COEFFICIENT_BOUND + 1))
            sign = 1 if rng.random() < 0.5 else -1
            terms[exponent] = Fraction(sign * magnitude)
        return LaurentPolynomial(num_vars, terms)

    @classmethod
    def generic_dense(cls, num_vars: int, degree: int, rng: np.random.Generator,
                      homogeneous: bool = False, constant: bool = True) -> LaurentPolynomial:
        """
        Generic polynomial of the given degree.

        homogeneous=True keeps only monomials of total degree exactly `degree`;
        constant=True adds a generic constant term either way.
        """
        if degree < 0:
            raise InputError(f"Degree must be nonnegative, got {degree}")
        support = []
        for exponent in product(range(degree + 1), repeat=num_vars):
            total = sum(exponent)
            if total > degree or (homogeneous and total != degree):
                continue
            if total == 0 and not constant:
                continue
            support.append(exponent)
        if constant:
            support.append(tuple([0] * num_vars))
        return cls.generic_polynomial(support, num_vars, rng)
