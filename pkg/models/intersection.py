"""Truncated intersection ring of a projective manifold generated by one divisor class h"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Tuple, Union

from core.exceptions import DataInconsistencyError, InputError
from models.series import Monomial, TruncatedSeries


class RingElement(TruncatedSeries):
    """Polynomial in h modulo h^(dim+1)"""

    def __init__(self, dim: int, coefficients: Union[Sequence, Mapping[Monomial, object], None] = None):
        if isinstance(coefficients, (list, tuple)):
            coefficients = {(i,): c for i, c in enumerate(coefficients)}
        super().__init__(1, dim, coefficients)

    def _like(self, coefficients: Mapping[Monomial, Fraction]) -> 'RingElement':
        return RingElement(self.truncation_degree, coefficients)

    @classmethod
    def h(cls, dim: int, coefficient=1) -> 'RingElement':
        return cls(dim, {(1,): coefficient})

    @classmethod
    def unit(cls, dim: int) -> 'RingElement':
        return cls(dim, {(0,): 1})

    @property
    def dim(self) -> int:
        return self.truncation_degree

    def degree_coefficient(self, degree: int) -> Fraction:
        return self.coefficient((degree,))

    def coefficient_list(self) -> Tuple[Fraction, ...]:
        return tuple(self.degree_coefficient(i) for i in range(self.dim + 1))

    def evaluate(self, deg_top: int) -> Fraction:
        """Top-degree coefficient times the top self-intersection of h"""
        return self.degree_coefficient(self.dim) * deg_top

    def __repr__(self) -> str:
        return f"RingElement(dim={self.dim}, {[str(c) for c in self.coefficient_list()]})"


@dataclass(frozen=True)
class IntersectionData:
    """
    A projective manifold M of dimension n with c_i(M) = gamma_i h^i and a divisor D = d h.

    deg_top is the top self-intersection number of h.
    """
    n: int
    deg_top: int
    chern_coeffs: Tuple[Fraction, ...]
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"Dimension must be positive, got {self.n}")
        if self.deg_top < 1:
            raise InputError(f"deg_top must be positive, got {self.deg_top}")
        if self.d < 1:
            raise InputError(f"D = d h needs d >= 1, got {self.d}")
        coeffs = tuple(Fraction(c) for c in self.chern_coeffs)
        if len(coeffs) != self.n + 1:
            raise InputError(f"Expected {self.n + 1} Chern coefficients, got {len(coeffs)}")
        if coeffs[0] != 1:
            raise InputError(f"c_0 must be 1, got {coeffs[0]}")
        object.__setattr__(self, 'chern_coeffs', coeffs)
        if (coeffs[-1] * self.deg_top).denominator != 1:
            raise DataInconsistencyError(f"chi(M) = {coeffs[-1] * self.deg_top} is not an integer")

    @property
    def chi_m(self) -> int:
        return int(self.chern_coeffs[-1] * self.deg_top)

    def with_degree(self, d: int) -> 'IntersectionData':
        return IntersectionData(self.n, self.deg_top, self.chern_coeffs, d)

    def total_chern_class(self) -> RingElement:
        return RingElement(self.n, list(self.chern_coeffs))

    def to_dict(self):
        return {
            "n": self.n,
            "deg_top": self.deg_top,
            "chern": [str(c) for c in self.chern_coeffs],
            "d": self.d,
        }
