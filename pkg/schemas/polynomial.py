from pydantic import BaseModel, Field, validator
from typing import List, Optional, Union


class TermJSON(BaseModel):
    """One term of an exact polynomial"""
    exp: List[int] = Field(..., description="Exponent vector")
    num: str = Field(..., description="Coefficient numerator")
    den: str = Field(default="1", description="Coefficient denominator")

    @validator('num', 'den')
    def must_be_integer_text(cls, v):
        try:
            int(v)
        except ValueError:
            raise ValueError(f'Coefficient part {v!r} is not an integer')
        return v

    @validator('den')
    def denominator_must_be_nonzero(cls, v):
        if int(v) == 0:
            raise ValueError('Coefficient denominator cannot be zero')
        return v


class PolynomialJSON(BaseModel):
    """Schema for the JSON polynomial form"""
    nvars: int = Field(..., ge=1, description="Number of variables")
    terms: List[TermJSON] = Field(default_factory=list)

    @validator('terms')
    def exponents_match_nvars(cls, v, values):
        nvars = values.get('nvars')
        for term in v:
            if nvars is not None and len(term.exp) != nvars:
                raise ValueError(f'Exponent {term.exp} does not have length {nvars}')
        return v


class GenericPolySpec(BaseModel):
    """Generic polynomial drawn from the run seed; degree "n" refers to --param"""
    degree: Union[int, str] = Field(..., description="Total degree or 'n'")
    homogeneous: bool = False
    constant: bool = True

    @validator('degree')
    def degree_must_be_valid(cls, v):
        if isinstance(v, str) and v != 'n':
            raise ValueError("Symbolic degree must be 'n'")
        if isinstance(v, int) and v < 0:
            raise ValueError('Degree must be nonnegative')
        return v


class GenericEntry(BaseModel):
    generic: GenericPolySpec


class SystemJSON(BaseModel):
    """Schema for a polynomial system file"""
    names: Optional[List[str]] = Field(default=None, description="Variable ordering")
    nvars: Optional[int] = Field(default=None, ge=1)
    polys: List[Union[str, PolynomialJSON, GenericEntry]] = Field(..., min_length=1)

    @validator('nvars')
    def nvars_matches_names(cls, v, values):
        names = values.get('names')
        if v is not None and names is not None and len(names) != v:
            raise ValueError(f'{len(names)} names given for nvars = {v}')
        return v
