from pydantic import BaseModel, Field, validator
from typing import List, Optional


class WeightSetJSON(BaseModel):
    """Schema for the weights of a diagonal torus representation"""
    rank: int = Field(..., ge=1, description="Rank of the torus")
    weights: List[List[int]] = Field(..., min_length=1)

    @validator('weights')
    def weights_match_rank(cls, v, values):
        rank = values.get('rank')
        for weight in v:
            if rank is not None and len(weight) != rank:
                raise ValueError(f'Weight {weight} does not have length {rank}')
        return v


class CatalogEntryOut(BaseModel):
    """Schema for one spherical-module catalog row, evaluated at given parameters"""
    id: int
    group_label: str
    module_label: str
    module_dim: int
    orbit_codim: int
    orbit_dim: int
    invariant_degrees: List[int]
    closed_generic_orbits: bool
    params: List[str]
    isotropy_label: Optional[str] = None


class SectionInput(BaseModel):
    """Euler characteristic, dimension and degree of a closed orbit"""
    chi: int = Field(..., description="Euler characteristic of the orbit")
    dim: int = Field(..., ge=1, description="Dimension of the orbit")
    deg: int = Field(..., ge=1, description="Degree of the orbit")
