import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from config.settings import settings
from core import exact
from core.exceptions import DomainError, InputError
from core.logging_utils import get_structured_logger
from core.validators import validate_and_clean_point, validate_and_clean_points, validate_dimension
from models.lattice import LatticePoint, LatticePolytope

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)

# Inward facet inequality <normal, x> >= offset
Facet = Tuple[Tuple[int, ...], int]


class HullCertificationError(Exception):
    """Floating-point facet candidates failed exact certification"""


# -----------------------------------------------------------------------------
# Full-dimensional facet machinery (points given in their own Z^k chart)
# -----------------------------------------------------------------------------

def _segment_facets(points: Sequence[LatticePoint]) -> List[Facet]:
    values = [p[0] for p in points]
    return [((1,), min(values)), ((-1,), -max(values))]


def _qhull_facets(points: Sequence[LatticePoint]) -> List[Facet]:
    """Facet candidates from Qhull, each certified exactly"""
    try:
        qhull = ConvexHull(np.array(points, dtype=float))
    except QhullError as e:
        raise HullCertificationError(str(e)) from e

    facets = set()
    for simplex in qhull.simplices:
        corner_points = [points[i] for i in simplex]
        normal = exact.hyperplane_normal(corner_points)
        if not any(normal):
            continue
        offset = exact.dot(normal, corner_points[0])
        values = [exact.dot(normal, p) for p in points]
        if all(v >= offset for v in values):
            facets.add((normal, offset))
        elif all(v <= offset for v in values):
            facets.add((tuple(-c for c in normal), -offset))
        else:
            raise HullCertificationError(f"Qhull facet {normal} separates input points")

    return sorted(facets)


def _brute_force_facets(points: Sequence[LatticePoint]) -> List[Facet]:
    """Exact facet enumeration over k-subsets of the exact vertex set"""
    vertices = [p for p in points if exact_is_vertex(p, points)]
    k = len(points[0])
    facets = set()
    for subset in combinations(vertices, k):
        normal = exact.hyperplane_normal(subset)
        if not any(normal):
            continue
        offset = exact.dot(normal, subset[0])
        values = [exact.dot(normal, v) for v in vertices]
        if all(v >= offset for v in values):
            facets.add((normal, offset))
        elif all(v <= offset for v in values):
            facets.add((tuple(-c for c in normal), -offset))

    # Keep only hyperplanes whose tight set spans a (k-1)-dimensional face
    result = []
    for normal, offset in facets:
        tight = [v for v in vertices if exact.dot(normal, v) == offset]
        if exact.affine_rank(tight) == k - 1:
            result.append((normal, offset))
    return sorted(result)


@lru_cache(maxsize=4096)
def _full_dim_facets(points: Tuple[LatticePoint, ...]) -> Tuple[Facet, ...]:
    """Primitive inward facets of a full-dimensional point set in its own chart"""
    if len(points[0]) == 1:
        return tuple(_segment_facets(points))
    try:
        return tuple(_qhull_facets(points))
    except HullCertificationError as e:
        logger.warning(f"Exact fallback for hull of {len(points)} points: {str(e)}")
        return tuple(_brute_force_facets(points))


def _vertices_from_facets(points: Sequence[LatticePoint], facets: Sequence[Facet]) -> List[LatticePoint]:
    """A point is a vertex iff the normals of the facets through it have full rank"""
    k = len(points[0])
    vertices = []
    for p in points:
        tight = [normal for normal, offset in facets if exact.dot(normal, p) == offset]
        if len(tight) >= k and exact.rank(tight) == k:
            vertices.append(p)
    return vertices


def exact_is_vertex(point: LatticePoint, points: Sequence[LatticePoint]) -> bool:
    """Exact linear-feasibility vertex test: point is not a convex combination of the others"""
    others = [q for q in points if q != point]
    if not others:
        return True
    return not exact.in_convex_hull(point, others)


# -----------------------------------------------------------------------------
# Affine charts
# -----------------------------------------------------------------------------

def _chart(points: Sequence[LatticePoint]) -> Tuple[int, Tuple[int, ...], List[LatticePoint]]:
    """Affine dimension, chart coordinates and the points projected onto them"""
    base = points[0]
    diffs = [exact.sub(p, base) for p in points[1:]]
    pivots = exact.pivot_columns(diffs) if diffs else ()
    projected = [tuple(p[c] for c in pivots) for p in points]
    return len(pivots), pivots, projected


@lru_cache(maxsize=4096)
def _hull_vertices(points: Tuple[LatticePoint, ...]) -> Tuple[Tuple[LatticePoint, ...], int]:
    if len(points) == 1:
        return points, 0

    k, _, projected = _chart(points)
    lookup = dict(zip(projected, points))
    if k == 1:
        low = min(projected)
        high = max(projected)
        return tuple(sorted((lookup[low], lookup[high]))), 1

    facets = _full_dim_facets(tuple(projected))
    vertices = _vertices_from_facets(projected, facets)
    return tuple(sorted(lookup[v] for v in vertices)), k


@lru_cache(maxsize=4096)
def _triangulate(vertices: Tuple[LatticePoint, ...]) -> Tuple[Tuple[LatticePoint, ...], ...]:
    """
    Exact triangulation by pulling the first vertex.

    Every facet missing the apex is triangulated recursively and coned from it;
    vertices of a facet are exactly the polytope vertices lying on it.
    """
    k, _, projected = _chart(vertices)
    if len(vertices) == k + 1:
        return (vertices,)

    apex, projected_apex = vertices[0], projected[0]
    simplices = []
    for normal, offset in _full_dim_facets(tuple(projected)):
        if exact.dot(normal, projected_apex) == offset:
            continue
        facet_vertices = tuple(v for v, q in zip(vertices, projected) if exact.dot(normal, q) == offset)
        for simplex in _triangulate(facet_vertices):
            simplices.append((apex,) + simplex)
    return tuple(simplices)


@lru_cache(maxsize=4096)
def _normalized_volume(vertices: Tuple[LatticePoint, ...]) -> int:
    return sum(exact.simplex_volume(simplex) for simplex in _triangulate(vertices))


# -----------------------------------------------------------------------------
# Service
# -----------------------------------------------------------------------------

class GeometryService:
    """Exact operations on lattice polytopes"""

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    @staticmethod
    def hull(points: Iterable[Sequence[int]], ambient_dim: int) -> LatticePolytope:
        """Vertex-minimal convex hull of a finite list of lattice points"""
        validate_dimension(ambient_dim, 'ambient_dim', maximum=settings.MAX_AMBIENT_DIM)
        cleaned = validate_and_clean_points(points, ambient_dim)
        if not cleaned:
            return LatticePolytope.empty(ambient_dim)

        vertices, affine_dim = _hull_vertices(tuple(sorted(cleaned)))
        structured_logger.debug(
            "Computed hull",
            ambient_dim=ambient_dim,
            input_points=len(cleaned),
            vertices=vertices,
            affine_dim=affine_dim
        )
        return LatticePolytope(ambient_dim=ambient_dim, vertices=vertices, affine_dim=affine_dim)

    @staticmethod
    def affine_dimension(points: Sequence[Sequence[int]]) -> int:
        """Rank of the difference set; -1 for no points"""
        if not points:
            return -1
        return exact.affine_rank(points)

    @staticmethod
    def is_vertex_of(point: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
        """True iff point is one of points and not a convex combination of the others"""
        target = tuple(point)
        candidates = [tuple(p) for p in points]
        return target in candidates and exact_is_vertex(target, list(dict.fromkeys(candidates)))

    # -------------------------------------------------------------------------
    # Measurement
    # -------------------------------------------------------------------------

    @staticmethod
    def normalized_volume(polytope: LatticePolytope) -> int:
        """d! times the Euclidean volume; 0 for lower-dimensional polytopes"""
        if polytope.is_empty:
            raise DomainError("Normalized volume of the empty polytope is undefined")
        if not polytope.is_full_dimensional:
            return 0
        return _normalized_volume(polytope.vertices)

    @staticmethod
    def facets(polytope: LatticePolytope) -> List[Facet]:
        """Primitive inward facet inequalities <a, x> >= b of a full-dimensional polytope"""
        if not polytope.is_full_dimensional:
            raise DomainError(
                f"Facets are only defined here for full-dimensional polytopes "
                f"(affine_dim {polytope.affine_dim}, ambient {polytope.ambient_dim})"
            )
        return list(_full_dim_facets(polytope.vertices))

    @classmethod
    def contains_origin_interior(cls, polytope: LatticePolytope) -> bool:
        """True iff the polytope is full-dimensional with the origin strictly inside every facet"""
        if not polytope.is_full_dimensional:
            return False
        return all(offset < 0 for _, offset in cls.facets(polytope))

    # -------------------------------------------------------------------------
    # Combination
    # -------------------------------------------------------------------------

    @classmethod
    def minkowski_sum(cls, first: LatticePolytope, second: LatticePolytope) -> LatticePolytope:
        """Hull of pairwise vertex sums"""
        if first.ambient_dim != second.ambient_dim:
            raise InputError(
                f"Minkowski sum of polytopes in dimensions {first.ambient_dim} and {second.ambient_dim}"
            )
        if first.is_empty or second.is_empty:
            raise DomainError("Minkowski sum with the empty polytope")

        sums = {tuple(a + b for a, b in zip(p, q)) for p in first.vertices for q in second.vertices}
        return cls.hull(sorted(sums), first.ambient_dim)

    @classmethod
    def dilate(cls, polytope: LatticePolytope, k: int) -> LatticePolytope:
        """Scale every vertex by a nonnegative integer"""
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise InputError(f"Dilation factor must be a nonnegative integer, got {k}")
        if polytope.is_empty:
            raise DomainError("Cannot dilate the empty polytope")
        if k == 0:
            return cls.hull([tuple([0] * polytope.ambient_dim)], polytope.ambient_dim)
        vertices = tuple(tuple(k * c for c in v) for v in polytope.vertices)
        return LatticePolytope(polytope.ambient_dim, vertices, polytope.affine_dim)

    @staticmethod
    def translate(polytope: LatticePolytope, shift: Sequence[int]) -> LatticePolytope:
        """Translate by a lattice vector"""
        vector = validate_and_clean_point(shift, polytope.ambient_dim)
        vertices = tuple(tuple(a + b for a, b in zip(v, vector)) for v in polytope.vertices)
        return LatticePolytope(polytope.ambient_dim, vertices, polytope.affine_dim)

    @classmethod
    def face(cls, polytope: LatticePolytope, xi: Sequence[int]) -> LatticePolytope:
        """Face on which the covector xi attains its minimum"""
        covector = validate_and_clean_point(xi, polytope.ambient_dim)
        if polytope.is_empty:
            raise DomainError("The empty polytope has no faces")

        values = [exact.dot(covector, v) for v in polytope.vertices]
        minimum = min(values)
        minimizers = [v for v, value in zip(polytope.vertices, values) if value == minimum]
        return cls.hull(minimizers, polytope.ambient_dim)
