"""Unit tests for CritService numeric verifications"""

import random

import numpy as np
import pytest

from core.exceptions import DegenerateSampleError, InputError, PreconditionError
from models.laurent import PolySystem
from services.crit_service import CritService, torus_roots
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService
from services.mixed_volume_service import MixedVolumeService

SEEDS = [0, 1, 2]


def random_planar_support(rng):
    """Three to five points in [0, 2]^2 spanning the plane"""
    while True:
        support = list({(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(rng.randint(3, 5))})
        if GeometryService.affine_dimension(support) == 2:
            return support


def system_from_supports(supports, seed=0):
    rng = np.random.default_rng(seed)
    return PolySystem(2, [LaurentService.generic_polynomial(s, 2, rng) for s in supports])


# =============================================================================
# Lagrange Multiplier Tests
# =============================================================================

class TestQuadricCrit:
    """Tests for critical points on the quadric sum x_i^2 = c"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_two_critical_points(self, n):
        """A generic functional should have two critical points"""
        report = CritService.random_quadric_crit(n, seed=n)
        assert report.count == 2
        assert report.max_residual <= 1e-8
        assert len(report.points[0]) == n

    def test_sample_input(self):
        """f = (0, 0, 2) should give x = (0, 0, +-1)"""
        report = CritService.quadric_crit([0, 0, 2], 1.0)
        assert report.count == 2
        assert sorted(point[2][0] for point in report.points) == pytest.approx([-1.0, 1.0])

    def test_isotropic_functional(self):
        """Q(f/2) = 0 should be a degenerate sample"""
        with pytest.raises(DegenerateSampleError):
            CritService.quadric_crit([1, 1j], 1.0)

    def test_zero_level(self):
        """c = 0 should be rejected"""
        with pytest.raises(InputError):
            CritService.quadric_crit([1, 2], 0)

    def test_seed_determinism(self):
        """The same seed should reproduce the same points"""
        assert CritService.random_quadric_crit(4, seed=9).points == CritService.random_quadric_crit(4, seed=9).points


class TestDetCrit:
    """Tests for critical points on det M = c"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_n_critical_points(self, n):
        """A generic trace functional should have n critical points"""
        report = CritService.random_det_crit(n, seed=n)
        assert report.count == n
        assert report.max_residual <= 1e-8

    def test_diagonal_sample(self):
        """F = diag(1, 2, 3) should give three critical points"""
        report = CritService.det_crit(np.diag([1.0, 2.0, 3.0]), 1.0)
        assert report.count == 3
        assert len(report.points[0]) == 9

    def test_singular_functional(self):
        """A singular F should be a degenerate sample"""
        with pytest.raises(DegenerateSampleError):
            CritService.det_crit([[1, 2], [2, 4]], 1.0)

    def test_non_square(self):
        """F must be square"""
        with pytest.raises(InputError):
            CritService.det_crit([[1, 2, 3], [4, 5, 6]], 1.0)


# =============================================================================
# Univariate Oracle Tests
# =============================================================================

class TestUnivariate:
    """Tests for companion-matrix root counts"""

    def test_torus_roots_drop_origin(self):
        """Roots at the origin should not be counted"""
        roots = torus_roots([0, 0, -1, 0, 1])
        assert len(roots) == 2
        assert sorted(np.round(np.real(roots), 8)) == [-1.0, 1.0]

    def test_torus_roots_repeated(self):
        """A double root should raise when separation is required and be kept otherwise"""
        with pytest.raises(DegenerateSampleError):
            torus_roots([1, -2, 1])
        roots = torus_roots([1, -2, 1], separated=False)
        assert len(roots) == 2
        assert np.allclose(roots, 1.0, atol=1e-6)

    def test_crit_count_example(self):
        """Support {-1, 0, 2} should give 3 critical points"""
        assert CritService.univariate_crit_count([-1, 0, 2]) == 3

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_symmetric_support(self, d):
        """Support -d..d should give 2d critical points"""
        assert CritService.univariate_crit_count(range(-d, d + 1)) == 2 * d

    def test_origin_not_interior(self):
        """Supports without 0 strictly inside should be refused"""
        with pytest.raises(PreconditionError):
            CritService.univariate_crit_count([0, 1])

    def test_single_exponent(self):
        """A monomial support should be rejected"""
        with pytest.raises(InputError):
            CritService.univariate_root_count([3, 3])

    def test_root_count_matches_bkk(self):
        """Nonzero roots should equal the length of the Newton segment"""
        rng = random.Random(61)
        for _ in range(30):
            support = sorted({rng.randint(-6, 6) for _ in range(rng.randint(2, 5))})
            if len(support) < 2:
                continue
            expected = MixedVolumeService.mixed_volume_normalized([GeometryService.hull([(a,) for a in support], 1)])
            for seed in SEEDS:
                assert CritService.univariate_root_count(support, seed) == expected

    def test_report_counts_attempts(self):
        """A clean first sample should take one attempt"""
        report = CritService.univariate_crit_report([-2, 1, 3], seed=5)
        assert report.attempts >= 1
        assert report.count == 5


# =============================================================================
# Bivariate Oracle Tests
# =============================================================================

class TestBivariate:
    """Tests for resultant-based torus root counts"""

    def test_two_lines(self):
        """Two generic lines should meet once"""
        system = LaurentService.parse_system(["2 + 3*x - 5*y", "-7 + x + 4*y"], names=["x", "y"])
        report = CritService.bivariate_root_report(system)
        assert report.count == 1
        assert report.max_residual <= 1e-8

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_dense_bezout(self, d):
        """Two dense degree-d curves should meet in d^2 torus points"""
        rng = np.random.default_rng(d)
        system = PolySystem(2, [LaurentService.generic_dense(2, d, rng), LaurentService.generic_dense(2, d, rng)])
        assert CritService.bivariate_root_count(system) == d * d

    def test_laurent_supports(self):
        """Negative exponents should be shifted into the polynomial chart"""
        system = LaurentService.parse_system(["x + x^-1 + y - 3", "y + y^-1 - x"], names=["x", "y"])
        assert CritService.bivariate_root_count(system) == MixedVolumeService.bkk_count(system)

    def test_matches_bkk(self):
        """Random planar systems should have BKK many torus roots"""
        rng = random.Random(73)
        for _ in range(20):
            system = system_from_supports([random_planar_support(rng), random_planar_support(rng)])
            expected = MixedVolumeService.bkk_count(system)
            for seed in SEEDS:
                assert CritService.bivariate_root_count(system, seed) == expected

    def test_even_y_exponents(self):
        """Solutions (x, y) and (x, -y) share a resultant root and should both count"""
        system = LaurentService.parse_system(
            ["3*x*y^2 - 5*x^2*y^2 + 7", "2*x + 11*x^2*y^2 - 13*x^2 + 17"], names=["x", "y"]
        )
        expected = MixedVolumeService.bkk_count(system)
        for seed in SEEDS:
            report = CritService.bivariate_root_report(system, seed)
            assert report.count == expected
            ys = [complex(*point[1]) for point in report.points]
            assert all(any(abs(y + other) < 1e-6 * max(1.0, abs(y)) for other in ys) for y in ys)

    def test_flat_support(self):
        """A one-dimensional support should be refused"""
        system = LaurentService.parse_system(["1 + x", "1 + x + y"], names=["x", "y"])
        with pytest.raises(PreconditionError):
            CritService.bivariate_root_count(system)

    def test_wrong_shape(self):
        """Only square systems in two variables are supported"""
        system = LaurentService.parse_system(["1 + x + y + z"], names=["x", "y", "z"])
        with pytest.raises(InputError):
            CritService.bivariate_root_count(system)
