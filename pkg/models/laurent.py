from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from core.exceptions import InputError

Exponent = Tuple[int, ...]
Coefficient = Union[Fraction, complex]


class LaurentPolynomial:
    """
    Immutable map from exponent vectors to nonzero coefficients.

    Coefficients are exact Fractions in the symbolic pipeline and complex
    doubles in numeric contexts.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Optional[Mapping[Sequence[int], Coefficient]] = None):
        if isinstance(num_vars, bool) or not isinstance(num_vars, int) or num_vars < 1:
            raise InputError(f"num_vars must be a positive integer, got {num_vars}")

        cleaned: Dict[Exponent, Coefficient] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != num_vars:
                raise InputError(f"Exponent {exponent} has length {len(exponent)}, expected {num_vars}")
            if not isinstance(coefficient, complex):
                coefficient = Fraction(coefficient)
            total = cleaned.get(exponent, 0) + coefficient
            if total == 0:
                cleaned.pop(exponent, None)
            else:
                cleaned[exponent] = total

        self.num_vars = num_vars
        self._terms = dict(sorted(cleaned.items(), reverse=True))
        self._hash = None

    @classmethod
    def constant(cls, num_vars: int, value: Coefficient) -> 'LaurentPolynomial':
        return cls(num_vars, {tuple([0] * num_vars): value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: Coefficient = 1) -> 'LaurentPolynomial':
        return cls(len(exponent), {tuple(exponent): coefficient})

    @property
    def terms(self) -> Dict[Exponent, Coefficient]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Exponent, Coefficient]]:
        return self._terms.items()

    @property
    def support(self) -> List[Exponent]:
        return list(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return len(self._terms) == 1 and not any(next(iter(self._terms)))

    @property
    def is_numeric(self) -> bool:
        return any(isinstance(c, complex) for c in self._terms.values())

    def coefficient(self, exponent: Sequence[int]) -> Coefficient:
        return self._terms.get(tuple(exponent), Fraction(0))

    def min_exponents(self) -> Exponent:
        """Componentwise minimum exponent; zeros for the zero polynomial"""
        if not self._terms:
            return tuple([0] * self.num_vars)
        return tuple(min(e[i] for e in self._terms) for i in range(self.num_vars))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return tuple([0] * self.num_vars)
        return tuple(max(e[i] for e in self._terms) for i in range(self.num_vars))

    # Arithmetic

    def _check_compatible(self, other: 'LaurentPolynomial'):
        if self.num_vars != other.num_vars:
            raise InputError(f"Polynomials in {self.num_vars} and {other.num_vars} variables")

    def __add__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        self._check_compatible(other)
        terms = dict(self._terms)
        for exponent, coefficient in other.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPolynomial(self.num_vars, terms)

    def __neg__(self) -> 'LaurentPolynomial':
        return LaurentPolynomial(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        return self + (-other)

    def __mul__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        self._check_compatible(other)
        terms: Dict[Exponent, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return LaurentPolynomial(self.num_vars, terms)

    def scale(self, factor: Coefficient) -> 'LaurentPolynomial':
        return LaurentPolynomial(self.num_vars, {e: c * factor for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.num_vars}, {self._terms})"


class PolySystem:
    """Ordered list of Laurent polynomials in a shared set of variables"""

    __slots__ = ("num_vars", "polys", "names")

    def __init__(self, num_vars: int, polys: Sequence[LaurentPolynomial], names: Optional[Sequence[str]] = None):
        for i, poly in enumerate(polys):
            if poly.num_vars != num_vars:
                raise InputError(f"Polynomial {i} has {poly.num_vars} variables, expected {num_vars}")
        if names is not None and len(names) != num_vars:
            raise InputError(f"{len(names)} variable names for {num_vars} variables")

        self.num_vars = num_vars
        self.polys: Tuple[LaurentPolynomial, ...] = tuple(polys)
        self.names: Tuple[str, ...] = tuple(names) if names is not None else default_names(num_vars)

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolySystem):
            return NotImplemented
        return self.num_vars == other.num_vars and self.polys == other.polys

    def __repr__(self) -> str:
        return f"PolySystem({self.num_vars}, {list(self.polys)})"


def default_names(num_vars: int) -> Tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(num_vars))
