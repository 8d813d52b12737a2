"""Truncated commutative power series with exact rational coefficients"""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from core.exceptions import InputError

Monomial = Tuple[int, ...]


class TruncatedSeries:
    """
    Power series in k symbols modulo total degree > truncation_degree.

    Zero coefficients are never stored; every operation truncates.
    """

    __slots__ = ("num_symbols", "truncation_degree", "_coefficients")

    def __init__(self, num_symbols: int, truncation_degree: int,
                 coefficients: Mapping[Sequence[int], object] = None):
        if num_symbols < 1:
            raise InputError(f"num_symbols must be positive, got {num_symbols}")
        if truncation_degree < 0:
            raise InputError(f"truncation_degree must be nonnegative, got {truncation_degree}")

        data: Dict[Monomial, Fraction] = {}
        for monomial, value in (coefficients or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != num_symbols or any(e < 0 for e in monomial):
                raise InputError(f"Invalid monomial {monomial} for {num_symbols} symbols")
            if sum(monomial) > truncation_degree:
                continue
            total = data.get(monomial, Fraction(0)) + Fraction(value)
            if total:
                data[monomial] = total
            else:
                data.pop(monomial, None)

        self.num_symbols = num_symbols
        self.truncation_degree = truncation_degree
        self._coefficients = data

    # Constructors

    @classmethod
    def zero(cls, num_symbols: int, truncation_degree: int):
        return cls(num_symbols, truncation_degree)

    @classmethod
    def one(cls, num_symbols: int, truncation_degree: int):
        return cls(num_symbols, truncation_degree, {tuple([0] * num_symbols): 1})

    @classmethod
    def symbol(cls, index: int, num_symbols: int, truncation_degree: int, coefficient=1):
        """coefficient * x_index"""
        monomial = tuple(1 if i == index else 0 for i in range(num_symbols))
        return cls(num_symbols, truncation_degree, {monomial: coefficient})

    # Access

    @property
    def coefficients(self) -> Dict[Monomial, Fraction]:
        return dict(self._coefficients)

    def items(self) -> Iterable[Tuple[Monomial, Fraction]]:
        return sorted(self._coefficients.items())

    def coefficient(self, monomial: Sequence[int]) -> Fraction:
        return self._coefficients.get(tuple(monomial), Fraction(0))

    def homogeneous_part(self, degree: int):
        return self._like({m: c for m, c in self._coefficients.items() if sum(m) == degree})

    def constant_term(self) -> Fraction:
        return self.coefficient([0] * self.num_symbols)

    # Arithmetic

    def _like(self, coefficients: Mapping[Monomial, Fraction]):
        """A series in the same ring"""
        return self.__class__(self.num_symbols, self.truncation_degree, coefficients)

    def _unit(self):
        return self._like({tuple([0] * self.num_symbols): 1})

    def _check(self, other: 'TruncatedSeries'):
        if not isinstance(other, TruncatedSeries):
            raise InputError(f"Cannot combine a series with {type(other).__name__}")
        if (self.num_symbols, self.truncation_degree) != (other.num_symbols, other.truncation_degree):
            raise InputError("Series live in different truncated rings")

    def __add__(self, other):
        self._check(other)
        data = dict(self._coefficients)
        for m, c in other._coefficients.items():
            data[m] = data.get(m, Fraction(0)) + c
        return self._like(data)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Fraction(factor)
        return self._like({m: c * factor for m, c in self._coefficients.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        data: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._coefficients.items():
            for m2, c2 in other._coefficients.items():
                product = tuple(a + b for a, b in zip(m1, m2))
                if sum(product) <= self.truncation_degree:
                    data[product] = data.get(product, Fraction(0)) + c1 * c2
        return self._like(data)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise InputError("Negative powers need inverse()")
        result = self._unit()
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self):
        """
        Multiplicative inverse by the geometric series.

        Writing the series as c (1 + u) with u of positive order, the inverse is
        c^-1 (1 - u + u^2 - ...), finite after truncation.
        """
        c = self.constant_term()
        if c == 0:
            raise InputError("Series with zero constant term is not invertible")
        unit = self.scale(1 / c) - self._unit()
        result = self._unit()
        power = self._unit()
        for j in range(1, self.truncation_degree + 1):
            power = power * unit
            result = result + power.scale((-1) ** j)
        return result.scale(1 / c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.num_symbols == other.num_symbols
                and self.truncation_degree == other.truncation_degree
                and self._coefficients == other._coefficients)

    def __hash__(self) -> int:
        return hash((self.num_symbols, self.truncation_degree, tuple(self.items())))

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*{list(m)}" for m, c in self.items()) or "0"
        return f"{self.__class__.__name__}(k={self.num_symbols}, n={self.truncation_degree}: {terms})"


class ChiSeries(TruncatedSeries):
    """Series in polytope symbols Delta_1..Delta_k, truncated at the ambient dimension"""

    @classmethod
    def complete_intersection(cls, num_symbols: int, truncation_degree: int) -> 'ChiSeries':
        """Product over i of Delta_i (1 + Delta_i)^-1"""
        result = cls.one(num_symbols, truncation_degree)
        for i in range(num_symbols):
            x = cls.symbol(i, num_symbols, truncation_degree)
            result = result * x * (cls.one(num_symbols, truncation_degree) + x).inverse()
        return result
