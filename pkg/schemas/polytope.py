from pydantic import BaseModel, Field, validator
from typing import List


class PolytopeJSON(BaseModel):
    """Schema for the JSON polytope form {"dim": d, "points": [...]}"""
    dim: int = Field(..., ge=1, description="Ambient dimension")
    points: List[List[int]] = Field(default_factory=list, description="Lattice points")

    @validator('points')
    def points_match_dim(cls, v, values):
        dim = values.get('dim')
        for point in v:
            if dim is not None and len(point) != dim:
                raise ValueError(f'Point {point} does not have length {dim}')
        return v


class PolytopeTupleJSON(BaseModel):
    """A list of polytopes, as read by mixed-volume"""
    polytopes: List[PolytopeJSON] = Field(..., min_length=1)
