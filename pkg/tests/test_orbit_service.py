"""Unit tests for OrbitService and the spherical module catalog"""

import random
from math import factorial

import numpy as np
import pytest

from core import exact
from core.exceptions import DomainError, InputError, PreconditionError
from models.catalog import CATALOG, CLOSED_GENERIC_ORBIT_IDS
from services.geometry_service import GeometryService
from services.laurent_service import LaurentService
from services.mixed_volume_service import MixedVolumeService
from services.orbit_service import OrbitService, weyl_group_order


def interior_origin_weights(rng, rank):
    """Random weights whose hull contains the origin in its interior"""
    weights = []
    for i in range(rank):
        unit = [0] * rank
        unit[i] = rng.randint(1, 2)
        weights.append(tuple(unit))
        unit = [0] * rank
        unit[i] = -rng.randint(1, 2)
        weights.append(tuple(unit))
    weights += [tuple(rng.randint(-2, 2) for _ in range(rank)) for _ in range(rng.randint(0, 3))]
    return weights


# =============================================================================
# Torus Orbit Tests
# =============================================================================

class TestTorusOrbits:
    """Tests for degrees, closedness and critical points of torus orbits"""

    def test_degree_of_standard_weights(self):
        """Weights e1, e2, -e1-e2 should give a cubic surface orbit"""
        assert OrbitService.torus_orbit_degree([[1, 0], [0, 1], [-1, -1]], 2) == 3

    def test_degree_of_rank_one(self):
        """Weights -2 and 3 should give degree 5"""
        assert OrbitService.torus_orbit_degree([[-2], [3], [0]], 1) == 5

    def test_degree_requires_full_dimension(self):
        """Collinear weights give a lower-dimensional orbit"""
        with pytest.raises(DomainError):
            OrbitService.torus_orbit_degree([[1, 1], [-1, -1]], 2)

    def test_weights_must_match_rank(self):
        """Weights of the wrong length should be rejected"""
        with pytest.raises(InputError):
            OrbitService.torus_orbit_degree([[1, 0], [1]], 2)

    def test_crit_count_equals_degree(self):
        """Shifted hulls should have mixed volume equal to the degree"""
        rng = random.Random(31)
        for _ in range(50):
            rank = rng.randint(1, 3)
            weights = interior_origin_weights(rng, rank)
            assert OrbitService.torus_crit_count(weights, rank) == OrbitService.torus_orbit_degree(weights, rank)

    def test_derivative_polytopes_bound(self):
        """Derivative polytopes sit inside the shifted hulls, so their mixed volume is at most the count"""
        rng = random.Random(53)
        for _ in range(20):
            rank = rng.randint(1, 2)
            weights = sorted(set(interior_origin_weights(rng, rank)))
            functional = LaurentService.generic_polynomial(weights, rank, np.random.default_rng(rng.randint(0, 99)))
            partials = LaurentService.support_shift_partials(functional)
            bound = MixedVolumeService.mixed_volume_normalized(partials)
            assert bound <= OrbitService.torus_crit_count(weights, rank)

    def test_crit_count_precondition(self):
        """Weights with the origin on the boundary should be refused"""
        with pytest.raises(PreconditionError):
            OrbitService.torus_crit_count([[0, 0], [1, 0], [0, 1]], 2)

    def test_closed_examples(self):
        """Closedness should follow the interior-origin criterion"""
        assert OrbitService.is_closed_orbit_embedding([[1, 0], [0, 1], [-1, -1]], 2)
        assert not OrbitService.is_closed_orbit_embedding([[1, 0], [0, 1], [1, 1]], 2)
        assert not OrbitService.is_closed_orbit_embedding([[1, 0], [-1, 0]], 2)
        assert not OrbitService.is_closed_orbit_embedding([], 2)

    def test_closed_matches_exact_oracle(self):
        """Closedness should agree with strict convex combination feasibility"""
        rng = random.Random(47)
        for _ in range(50):
            rank = rng.randint(2, 3)
            weights = list({tuple(rng.randint(-2, 2) for _ in range(rank)) for _ in range(rng.randint(2, 6))})
            full = GeometryService.affine_dimension(weights) == rank
            expected = full and exact.strict_convex_combination(tuple([0] * rank), weights)
            assert OrbitService.is_closed_orbit_embedding(weights, rank) == expected

    def test_closed_unimodular_invariance(self):
        """A unimodular change of basis should not change closedness"""
        weights = [(2, 1), (-1, 1), (-1, -3), (0, 2)]
        sheared = [(a + b, b) for a, b in weights]
        assert OrbitService.is_closed_orbit_embedding(weights, 2) == \
            OrbitService.is_closed_orbit_embedding(sheared, 2)


# =============================================================================
# Section Euler Characteristic Tests
# =============================================================================

class TestSectionChi:
    """Tests for chi of generic hyperplane sections"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_sl_n(self, n):
        """SL(n) in M(n) should give (-1)^(n^2) n"""
        assert OrbitService.reductive_section_chi(n * n - 1, n) == (-1) ** (n * n) * n

    def test_e6_cubic(self):
        """The E6 cubic level set should give -3"""
        assert OrbitService.section_chi(0, 26, 3) == -3

    def test_sphere(self):
        """A conic section of the 2-sphere should have chi 0"""
        assert OrbitService.section_chi(2, 2, 2) == 0

    @pytest.mark.parametrize("chi_x,dim,degree", [(0, 3, 2), (2, 2, 2), (-4, 7, 5), (1, 26, 3)])
    def test_parity_flip(self, chi_x, dim, degree):
        """Raising the dimension by one should flip the sign of the degree term"""
        lower = OrbitService.section_chi(chi_x, dim, degree) - chi_x
        upper = OrbitService.section_chi(chi_x, dim + 1, degree) - chi_x
        assert upper == -lower
        assert abs(lower) == degree

    def test_invalid_dimension(self):
        """Dimension must be positive"""
        with pytest.raises(InputError):
            OrbitService.section_chi(0, 0, 1)

    def test_chi_homogeneous(self):
        """Equal rank should give the Weyl group quotient"""
        assert OrbitService.chi_homogeneous(2, 2, 12, 6) == 2
        assert OrbitService.chi_homogeneous(2, 1, 12, 2) == 0

    def test_chi_homogeneous_rejects_larger_subgroup(self):
        """A subgroup cannot have larger rank"""
        with pytest.raises(InputError):
            OrbitService.chi_homogeneous(1, 2, 2, 2)

    def test_chi_reductive_group(self):
        """Reductive groups have chi 0"""
        assert OrbitService.chi_reductive_group() == 0


# =============================================================================
# Catalog Tests
# =============================================================================

class TestCatalog:
    """Tests for the spherical module catalog"""

    def test_catalog_size(self):
        """The catalog should have ids 0 to 37"""
        entries = OrbitService.catalog_list()
        assert [e.id for e in entries] == list(range(38))
        assert all(e.orbit_codim <= e.module_dim for e in entries)

    def test_closed_flags(self):
        """closed_generic_orbits should follow the closed id set"""
        for row in CATALOG:
            assert row.closed_generic_orbits == (row.id in CLOSED_GENERIC_ORBIT_IDS)

    def test_lookup_with_params(self):
        """Formulas should evaluate at the given parameters"""
        entry = OrbitService.catalog_lookup(23, n=3)
        assert entry.module_dim == 9
        assert entry.invariant_degrees == [3]
        assert entry.orbit_dim == 8

    def test_lookup_below_minimum(self):
        """Parameters below the table minimum should be rejected"""
        with pytest.raises(InputError):
            OrbitService.catalog_lookup(23, n=1)

    def test_lookup_constraint(self):
        """Row constraints such as n > m should be enforced"""
        with pytest.raises(InputError):
            OrbitService.catalog_lookup(22, n=2, m=2)

    def test_unknown_id(self):
        """Unknown ids should be rejected"""
        with pytest.raises(InputError):
            OrbitService.catalog_lookup(38)

    @pytest.mark.parametrize("entry_id,params,expected", [
        (23, {"n": 2}, 2),
        (6, {"n": 2}, 2),
        (7, {"n": 1}, 0),
        (12, {}, 0),
        (14, {}, 2),
        (28, {"n": 1}, 1),
        (13, {}, -3),
    ])
    def test_catalog_section_chi(self, entry_id, params, expected):
        """Catalog entries with one invariant should give a section chi"""
        assert OrbitService.catalog_section_chi(entry_id, **params) == expected

    @pytest.mark.parametrize("entry_id", [0, 1, 20, 29, 36])
    def test_catalog_section_chi_refused(self, entry_id):
        """Entries without closed orbits or a single invariant should be refused"""
        with pytest.raises(DomainError):
            OrbitService.catalog_section_chi(entry_id)

    def test_orbit_chi_with_unipotent_isotropy(self):
        """Isotropy with a unipotent radical should give chi 0"""
        assert OrbitService.catalog_orbit_chi(1, n=3) == 0

    def test_orbit_chi_of_even_sphere(self):
        """SO(2n+1)/SO(2n) should have chi 2 and a zero section chi"""
        assert OrbitService.catalog_orbit_chi(7, n=2) == 2
        assert OrbitService.catalog_section_chi(7, n=2) == 0


# =============================================================================
# Weyl Group And SL(2) Tests
# =============================================================================

class TestWeylAndSl2:
    """Tests for Weyl group orders and the SL(2) example"""

    @pytest.mark.parametrize("letter,rank,order", [
        ("A", 3, 24), ("B", 3, 48), ("C", 2, 8), ("D", 4, 192),
        ("G", 2, 12), ("F", 4, 1152), ("E", 6, 51840), ("E", 8, 696729600), ("t", 1, 1),
    ])
    def test_weyl_group_order(self, letter, rank, order):
        """Weyl group orders should match the classical formulas"""
        assert weyl_group_order(letter, rank) == order

    def test_unknown_type(self):
        """Unknown Cartan types should be rejected"""
        with pytest.raises(InputError):
            weyl_group_order("E", 5)

    def test_sl2_weights(self):
        """V_n should have weights -n, -n+2, ..., n"""
        assert OrbitService.sl2_weights(3) == [(-3,), (-1,), (1,), (3,)]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_sl2_degree(self, n):
        """The image of SL(2) should have degree 2n^3"""
        assert OrbitService.sl2_degree(n) == 2 * n ** 3

    def test_sl2_section_chi(self):
        """The section chi should follow 2n^3 - 4n^2 + 4n"""
        assert OrbitService.sl2_section_chi(2) == 8

    def test_reductive_section_degree(self):
        """SL(2) in M(2) is a quadric threefold"""
        assert OrbitService.reductive_section_chi(3, 2) == 2 == OrbitService.sl2_section_chi(1)

    def test_a_type_weyl_is_factorial(self):
        """A_n should have order (n+1)!"""
        assert all(weyl_group_order("A", r) == factorial(r + 1) for r in range(1, 6))
