"""Unit tests for truncated power series"""

import random
from fractions import Fraction

import pytest

from core.exceptions import InputError
from models.intersection import RingElement
from models.series import ChiSeries, TruncatedSeries


# =============================================================================
# TruncatedSeries Tests
# =============================================================================

class TestTruncatedSeries:
    """Tests for exact truncated arithmetic"""

    def test_truncates_on_construction(self):
        """Monomials above the truncation degree should be dropped"""
        s = TruncatedSeries(2, 2, {(1, 1): 3, (2, 1): 5})
        assert s.coefficients == {(1, 1): Fraction(3)}

    def test_zero_coefficients_not_stored(self):
        """Coefficients that cancel should disappear"""
        x = TruncatedSeries.symbol(0, 1, 3)
        assert (x - x).coefficients == {}
        assert (x - x) == TruncatedSeries.zero(1, 3)

    def test_multiplication_truncates(self):
        """x^2 * x^2 should vanish modulo degree 4"""
        x = TruncatedSeries.symbol(0, 1, 3)
        assert (x ** 2) * (x ** 2) == TruncatedSeries.zero(1, 3)

    def test_geometric_inverse(self):
        """(1 + x)^-1 should be 1 - x + x^2 - x^3"""
        one = TruncatedSeries.one(1, 3)
        x = TruncatedSeries.symbol(0, 1, 3)
        inverse = (one + x).inverse()
        assert [inverse.coefficient((i,)) for i in range(4)] == [1, -1, 1, -1]
        assert inverse * (one + x) == one

    def test_inverse_with_scaled_constant(self):
        """(2 + y)^-1 should start with 1/2"""
        s = TruncatedSeries(2, 2, {(0, 0): 2, (0, 1): 1})
        inverse = s.inverse()
        assert inverse.constant_term() == Fraction(1, 2)
        assert inverse * s == TruncatedSeries.one(2, 2)

    def test_inverse_requires_unit(self):
        """A series without constant term should not be invertible"""
        with pytest.raises(InputError):
            TruncatedSeries.symbol(0, 1, 2).inverse()

    def test_negative_power(self):
        """Negative powers should be rejected"""
        with pytest.raises(InputError):
            TruncatedSeries.one(1, 2) ** -1

    def test_mismatched_rings(self):
        """Series from different rings should not combine"""
        with pytest.raises(InputError):
            TruncatedSeries.one(1, 2) + TruncatedSeries.one(1, 3)

    def test_invalid_monomial(self):
        """Negative exponents should be rejected"""
        with pytest.raises(InputError):
            TruncatedSeries(1, 2, {(-1,): 1})

    def test_homogeneous_part(self):
        """homogeneous_part should keep only one total degree"""
        s = TruncatedSeries(2, 3, {(0, 0): 1, (1, 0): 2, (0, 1): 3, (1, 1): 4})
        assert s.homogeneous_part(1).coefficients == {(1, 0): 2, (0, 1): 3}

    def test_scalar_multiplication(self):
        """Integers and fractions should scale on either side"""
        x = TruncatedSeries.symbol(0, 1, 2)
        assert (3 * x).coefficient((1,)) == 3
        assert (x * Fraction(1, 2)).coefficient((1,)) == Fraction(1, 2)


# =============================================================================
# ChiSeries Tests
# =============================================================================

class TestChiSeries:
    """Tests for the complete intersection series"""

    def test_single_symbol(self):
        """Delta (1 + Delta)^-1 should alternate from degree 1"""
        series = ChiSeries.complete_intersection(1, 4)
        assert [series.coefficient((i,)) for i in range(5)] == [0, 1, -1, 1, -1]

    def test_two_symbols_degree_three(self):
        """Degree-3 part of two factors should be -D1^2 D2 - D1 D2^2"""
        series = ChiSeries.complete_intersection(2, 3)
        assert series.homogeneous_part(3).coefficients == {(2, 1): -1, (1, 2): -1}

    def test_subclass_arithmetic_keeps_type(self):
        """Products of ChiSeries should remain ChiSeries"""
        series = ChiSeries.complete_intersection(2, 2)
        assert isinstance(series * series, ChiSeries)

    def test_ring_laws(self):
        """Products should be commutative, associative and distribute over sums"""
        rng = random.Random(43)

        def random_series():
            return ChiSeries(3, 3, {
                (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                for _ in range(6)
            })

        for _ in range(10):
            a, b, c = random_series(), random_series(), random_series()
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) + c == a + (b + c)


# =============================================================================
# RingElement Tests
# =============================================================================

class TestRingElement:
    """Tests for the one-generator intersection ring"""

    def test_from_list(self):
        """A coefficient list should map to powers of h"""
        element = RingElement(2, [1, 3, 3])
        assert element.coefficient_list() == (1, 3, 3)

    def test_arithmetic_keeps_type(self):
        """Operations should return RingElement instances"""
        h = RingElement.h(3)
        product = (RingElement.unit(3) + h).inverse() * h
        assert isinstance(product, RingElement)
        assert product.coefficient_list() == (0, 1, -1, 1)

    def test_evaluate(self):
        """evaluate should read the top coefficient times deg_top"""
        assert RingElement(2, [1, 2, 5]).evaluate(2) == 10

    def test_truncation(self):
        """h^3 should vanish in dimension 2"""
        assert RingElement.h(2) ** 3 == RingElement(2, [])
