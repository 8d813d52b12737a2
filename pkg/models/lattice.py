from dataclasses import dataclass
from typing import Dict, List, Tuple

LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class LatticePolytope:
    """
    Vertex-minimal convex hull of integer points.

    Vertices are stored sorted lexicographically so that two hulls of the same
    point set compare equal regardless of input order. affine_dim is -1 for
    the empty polytope.
    """
    ambient_dim: int
    vertices: Tuple[LatticePoint, ...]
    affine_dim: int

    @classmethod
    def empty(cls, ambient_dim: int) -> 'LatticePolytope':
        return cls(ambient_dim=ambient_dim, vertices=(), affine_dim=-1)

    @property
    def is_empty(self) -> bool:
        return self.affine_dim < 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    @property
    def is_point(self) -> bool:
        return self.affine_dim == 0

    def to_dict(self) -> Dict[str, object]:
        """JSON polytope form {"dim": d, "points": [...]}"""
        return {"dim": self.ambient_dim, "points": [list(v) for v in self.vertices]}

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self.ambient_dim}, affine_dim={self.affine_dim}, vertices={list(self.vertices)})"


def unit_simplex_points(dim: int) -> List[LatticePoint]:
    """Origin and the standard basis vectors of Z^dim"""
    points = [tuple([0] * dim)]
    for i in range(dim):
        points.append(tuple(1 if j == i else 0 for j in range(dim)))
    return points
