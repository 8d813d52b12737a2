"""Unit tests for MixedVolumeService"""

import random
from unittest.mock import patch

import pytest

from config.settings import settings
from core.exceptions import InputError
from models.lattice import unit_simplex_points
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService
from services.mixed_volume_service import MixedVolumeService

# Instances per dimension for each randomized property
PROPERTY_CASES = {2: 12, 3: 6, 4: 2}


def simplex(dim, k=1):
    return GeometryService.dilate(GeometryService.hull(unit_simplex_points(dim), dim), k)


def random_polytope(rng, dim, low=0, high=2):
    count = rng.randint(dim, dim + 2)
    points = [tuple(rng.randint(low, high) for _ in range(dim)) for _ in range(count)]
    return GeometryService.hull(points, dim)


def random_tuple(rng, dim):
    return [random_polytope(rng, dim) for _ in range(dim)]


def property_cases(seed):
    rng = random.Random(seed)
    for dim, count in PROPERTY_CASES.items():
        for _ in range(count):
            yield rng, dim


# =============================================================================
# Known Values
# =============================================================================

class TestKnownMixedVolumes:
    """Mixed volumes with closed-form values"""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_sl2_degree(self, n):
        """MV(2D, nD, nD, nD) over the unit 4-simplex should equal 2n^3"""
        value = MixedVolumeService.mixed_volume_normalized([simplex(4, 2), simplex(4, n), simplex(4, n), simplex(4, n)])
        assert value == 2 * n ** 3

    def test_two_lines(self):
        """Two unit triangles should have mixed volume 1"""
        assert MixedVolumeService.mixed_volume_normalized([simplex(2), simplex(2)]) == 1

    def test_bezout_plane(self):
        """Dilated triangles should multiply like Bezout's theorem"""
        assert MixedVolumeService.mixed_volume_normalized([simplex(2, 3), simplex(2, 4)]) == 12

    def test_orthogonal_segments(self):
        """Orthogonal segments in the plane should have mixed volume 1"""
        a = GeometryService.hull([(0, 0), (1, 0)], 2)
        b = GeometryService.hull([(0, 0), (0, 1)], 2)
        assert MixedVolumeService.mixed_volume_normalized([a, b]) == 1

    def test_parallel_segments(self):
        """Parallel segments should have mixed volume 0"""
        a = GeometryService.hull([(0, 0), (1, 0)], 2)
        b = GeometryService.hull([(0, 0), (2, 0)], 2)
        assert MixedVolumeService.mixed_volume_normalized([a, b]) == 0

    def test_one_dimensional(self):
        """In dimension 1 the mixed volume should be the length"""
        assert MixedVolumeService.mixed_volume_normalized([GeometryService.hull([(-2,), (5,)], 1)]) == 7

    def test_parallel_workers_agree(self):
        """Threaded evaluation should give the same value"""
        polytopes = [simplex(3, 1), simplex(3, 2), simplex(3, 3)]
        sequential = MixedVolumeService.mixed_volume_normalized(polytopes)
        with patch.object(settings, "MAX_WORKERS", 4):
            assert MixedVolumeService.mixed_volume_normalized(polytopes) == sequential == 6


# =============================================================================
# Validation
# =============================================================================

class TestValidation:
    """Input validation for mixed volumes"""

    def test_wrong_count(self):
        """The tuple length should match the ambient dimension"""
        with pytest.raises(InputError):
            MixedVolumeService.mixed_volume_normalized([simplex(3), simplex(3)])

    def test_empty_tuple(self):
        """An empty tuple should be rejected"""
        with pytest.raises(InputError):
            MixedVolumeService.mixed_volume_normalized([])

    def test_mixed_dimensions(self):
        """Polytopes of different ambient dimensions should be rejected"""
        with pytest.raises(InputError):
            MixedVolumeService.mixed_volume_normalized([simplex(2), GeometryService.hull([(0,), (1,)], 1)])

    def test_subset_sums_cover_all_masks(self):
        """subset_sums should return one entry per nonempty subset"""
        sums = dict(MixedVolumeService.subset_sums([simplex(3)] * 3))
        assert sorted(sums) == list(range(1, 8))
        assert sums[7] == simplex(3, 3)


# =============================================================================
# Randomized Properties
# =============================================================================

class TestMixedVolumeProperties:
    """Symmetry, multilinearity and invariance on random lattice polytopes"""

    def test_symmetry(self):
        """Permuting the tuple should not change the value"""
        for rng, dim in property_cases(101):
            polytopes = random_tuple(rng, dim)
            shuffled = polytopes[:]
            rng.shuffle(shuffled)
            assert MixedVolumeService.mixed_volume_normalized(shuffled) == \
                MixedVolumeService.mixed_volume_normalized(polytopes)

    def test_minkowski_multilinearity(self):
        """MV(P + P', ...) should equal MV(P, ...) + MV(P', ...)"""
        for rng, dim in property_cases(202):
            polytopes = random_tuple(rng, dim)
            extra = random_polytope(rng, dim)
            summed = [GeometryService.minkowski_sum(polytopes[0], extra)] + polytopes[1:]
            assert MixedVolumeService.mixed_volume_normalized(summed) == (
                MixedVolumeService.mixed_volume_normalized(polytopes)
                + MixedVolumeService.mixed_volume_normalized([extra] + polytopes[1:])
            )

    def test_dilation_linearity(self):
        """MV(kP, ...) should equal k MV(P, ...)"""
        for rng, dim in property_cases(303):
            polytopes = random_tuple(rng, dim)
            k = rng.randint(2, 3)
            dilated = [GeometryService.dilate(polytopes[0], k)] + polytopes[1:]
            assert MixedVolumeService.mixed_volume_normalized(dilated) == \
                k * MixedVolumeService.mixed_volume_normalized(polytopes)

    def test_translation_invariance(self):
        """Translating a summand should not change the value"""
        for rng, dim in property_cases(404):
            polytopes = random_tuple(rng, dim)
            shift = [rng.randint(-3, 3) for _ in range(dim)]
            moved = [GeometryService.translate(polytopes[0], shift)] + polytopes[1:]
            assert MixedVolumeService.mixed_volume_normalized(moved) == \
                MixedVolumeService.mixed_volume_normalized(polytopes)

    def test_diagonal(self):
        """MV(P, ..., P) should equal the normalized volume of P"""
        for rng, dim in property_cases(505):
            polytope = random_polytope(rng, dim)
            assert MixedVolumeService.mixed_volume_normalized([polytope] * dim) == \
                GeometryService.normalized_volume(polytope)


# =============================================================================
# BKK Counts
# =============================================================================

class TestBkkCount:
    """Tests for bkk_count on parsed systems"""

    def test_two_lines(self):
        """Two generic lines should meet once"""
        system = LaurentService.parse_system(["1 + x + y", "2 - x + 3*y"], names=["x", "y"])
        assert MixedVolumeService.bkk_count(system) == 1

    def test_dense_conics(self):
        """Two dense conics should meet in 4 torus points"""
        conic = "1 + x + y + x^2 + x*y + y^2"
        system = LaurentService.parse_system([conic, conic], names=["x", "y"])
        assert MixedVolumeService.bkk_count(system) == 4

    def test_laurent_system(self):
        """x + 1/x + y - 3 and y + 1/y - x should have mixed volume 4"""
        system = LaurentService.parse_system(["x + x^-1 + y - 3", "y + y^-1 - x"], names=["x", "y"])
        # Newton polytopes: a triangle with a horizontal base and its transpose
        assert MixedVolumeService.bkk_count(system) == 4

    def test_non_square_system(self):
        """A system with fewer equations than variables should be rejected"""
        system = LaurentService.parse_system(["1 + x + y"], names=["x", "y"])
        with pytest.raises(InputError):
            MixedVolumeService.bkk_count(system)

    def test_zero_polynomial(self):
        """A zero polynomial should be rejected"""
        system = LaurentService.parse_system(["0", "1 + x + y"], names=["x", "y"])
        with pytest.raises(InputError):
            MixedVolumeService.bkk_count(system)
