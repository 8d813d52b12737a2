from pydantic import BaseModel, Field, validator
from typing import List, Optional, Union

# A complex number in JSON: a real number or a [re, im] pair
ComplexJSON = Union[float, List[float]]


def to_complex(value: ComplexJSON) -> complex:
    if isinstance(value, list):
        if len(value) != 2:
            raise ValueError(f'Complex value {value} must be [re, im]')
        return complex(value[0], value[1])
    return complex(value)


class QuadricInput(BaseModel):
    """Functional coordinates f and level c of the quadric sum x_i^2 = c"""
    f: List[ComplexJSON] = Field(..., min_length=2)
    c: ComplexJSON = 1.0

    @validator('f', each_item=True)
    def entries_must_be_complex(cls, v):
        to_complex(v)
        return v


class DetInput(BaseModel):
    """Matrix F of the trace functional and level c of det = c"""
    F: List[List[ComplexJSON]] = Field(..., min_length=1)
    c: ComplexJSON = 1.0

    @validator('F')
    def must_be_square(cls, v):
        if any(len(row) != len(v) for row in v):
            raise ValueError('F must be a square matrix')
        return v


class CritReport(BaseModel):
    """Critical points found numerically, with their verification residual"""
    count: int = Field(..., ge=0)
    points: List[List[List[float]]] = Field(default_factory=list, description="Points as lists of [re, im]")
    max_residual: float = Field(..., ge=0)
    seed: Optional[int] = None
    attempts: int = 1
