from .lattice import LatticePolytope
from .laurent import LaurentPolynomial, PolySystem
from .series import ChiSeries, TruncatedSeries
from .intersection import IntersectionData, RingElement

__all__ = [
    "LatticePolytope",
    "LaurentPolynomial",
    "PolySystem",
    "ChiSeries",
    "TruncatedSeries",
    "IntersectionData",
    "RingElement",
]
