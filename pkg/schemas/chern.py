from fractions import Fraction
from pydantic import BaseModel, Field, validator
from typing import List, Union


class IntersectionDataJSON(BaseModel):
    """Schema for {"n": .., "deg_top": .., "chern": [...], "d": ..}"""
    n: int = Field(..., ge=1, description="Complex dimension of M")
    deg_top: int = Field(..., ge=1, description="Top self-intersection of the generator class")
    chern: List[Union[int, str]] = Field(..., description="gamma_0..gamma_n, integers or 'p/q' text")
    d: int = Field(..., ge=1, description="D = d * h")

    @validator('chern')
    def chern_must_be_rational(cls, v, values):
        n = values.get('n')
        if n is not None and len(v) != n + 1:
            raise ValueError(f'Expected {n + 1} Chern coefficients, got {len(v)}')
        for item in v:
            try:
                Fraction(item)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f'Chern coefficient {item!r} is not a rational number')
        return v

    def coefficients(self) -> List[Fraction]:
        return [Fraction(item) for item in self.chern]
