"""
Static catalog of indecomposable modules with spherical generic orbits.

Dimension, rank and degree formulas are sympy expressions in the table
parameters n and m. Cartan types use the letters A, B, C, D, E, F, G with a
rank formula; "t" is a one-dimensional central torus. Rows whose generic
isotropy has a unipotent radical set isotropy_unipotent.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

# (letter, rank formula)
CartanType = Tuple[str, str]

# 13 is a level set of its cubic invariant, hence closed, though the published list omits it
CLOSED_GENERIC_ORBIT_IDS = frozenset({0, 2, 4, 5, 6, 7, 12, 13, 14, 16, 17, 19, 20, 21, 23, 24, 26, 28, 29, 35, 36, 37})


@dataclass(frozen=True)
class CatalogRow:
    id: int
    group_label: str
    module_label: str
    module_dim: str
    orbit_codim: int
    group_types: Tuple[CartanType, ...]
    isotropy_label: Optional[str] = None
    isotropy_types: Optional[Tuple[CartanType, ...]] = None
    isotropy_unipotent: bool = False
    invariant_degrees: Tuple[str, ...] = ()
    params: Dict[str, int] = field(default_factory=dict)  # name -> minimum value
    constraint: Optional[str] = None

    @property
    def closed_generic_orbits(self) -> bool:
        return self.id in CLOSED_GENERIC_ORBIT_IDS


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog row evaluated at concrete parameters"""
    id: int
    group_label: str
    module_label: str
    module_dim: int
    orbit_codim: int
    invariant_degrees: List[int]
    closed_generic_orbits: bool
    params: Dict[str, int]
    isotropy_label: Optional[str] = None

    @property
    def orbit_dim(self) -> int:
        return self.module_dim - self.orbit_codim


N = {"n": 1}
N2 = {"n": 2}
N3 = {"n": 3}
NM = {"n": 1, "m": 1}

CATALOG: Tuple[CatalogRow, ...] = (
    # Simple groups
    CatalogRow(0, "{e}", "0", "1", 1, (), "0", (), invariant_degrees=("1",)),
    CatalogRow(1, "SL(n)", "phi_1", "n", 0, (("A", "n-1"),), "A_{n-2}+R_{n-1}",
               (("A", "n-2"),), True, params=N2),
    CatalogRow(2, "Lambda^2 SL(2n)", "phi_2", "2*n**2-n", 1, (("A", "2*n-1"),), "C_n",
               (("C", "n"),), invariant_degrees=("n",), params=N),
    CatalogRow(3, "Lambda^2 SL(2n+1)", "phi_2", "2*n**2+n", 0, (("A", "2*n"),), "C_n+R_{2n}",
               (("C", "n"),), True, params=N),
    CatalogRow(4, "S^2 SL(2n)", "2 phi_1", "2*n**2+n", 1, (("A", "2*n-1"),), "D_n",
               (("D", "n"),), invariant_degrees=("2*n",), params=N),
    CatalogRow(5, "S^2 SL(2n+1)", "2 phi_1", "2*n**2+3*n+1", 1, (("A", "2*n"),), "B_n",
               (("B", "n"),), invariant_degrees=("2*n+1",), params=N),
    CatalogRow(6, "SO(2n)", "phi_1", "2*n", 1, (("D", "n"),), "B_{n-1}",
               (("B", "n-1"),), invariant_degrees=("2",), params=N2),
    CatalogRow(7, "SO(2n+1)", "phi_1", "2*n+1", 1, (("B", "n"),), "D_n",
               (("D", "n"),), invariant_degrees=("2",), params=N),
    CatalogRow(8, "Spin(7)", "phi_3", "8", 1, (("B", "3"),), "G_2", (("G", "2"),)),
    CatalogRow(9, "Spin(9)", "phi_4", "16", 1, (("B", "4"),), "B_3", (("B", "3"),)),
    CatalogRow(10, "Spin(10)", "phi_4", "16", 0, (("D", "5"),), "B_3+R_8", (("B", "3"),), True),
    CatalogRow(11, "Sp(2n)", "phi_1", "2*n", 0, (("C", "n"),), "C_{n-1}+R_{2n-1}",
               (("C", "n-1"),), True, params=N),
    CatalogRow(12, "G_2", "phi_1", "7", 1, (("G", "2"),), "A_2", (("A", "2"),), invariant_degrees=("2",)),
    CatalogRow(13, "E_6", "phi_1", "27", 1, (("E", "6"),), "F_4", (("F", "4"),), invariant_degrees=("3",)),

    # Non-simple groups
    CatalogRow(14, "SL(2) x K*", "phi_1 eps + phi_1 eps^-1", "4", 1, (("A", "1"), ("t", "1")), "t_1",
               (("t", "1"),), invariant_degrees=("2",)),
    CatalogRow(15, "SL(n) x K*", "phi_1 eps^a + phi_1 eps^b", "2*n", 0, (("A", "n-1"), ("t", "1")),
               "A_{n-3}+t_1+R_{2(n-2)}", (("A", "n-3"), ("t", "1")), True, params=N3),
    CatalogRow(16, "SL(n)", "phi_1 + phi_{n-1}", "2*n", 1, (("A", "n-1"),), "A_{n-2}",
               (("A", "n-2"),), invariant_degrees=("2",), params=N3),
    CatalogRow(17, "SL(2n+1)", "phi_1 + phi_2", "(2*n+1)*(n+1)", 1, (("A", "2*n"),), "C_n",
               (("C", "n"),), invariant_degrees=("n+1",), params=N),
    CatalogRow(18, "SL(2n+1) x K*", "phi_1 eps^a + phi_{2n-1} eps^b", "(2*n+1)*(n+1)", 0,
               (("A", "2*n"), ("t", "1")), "C_{n-1}+t_1+R_{2(2n-1)}", (("C", "n-1"), ("t", "1")), True,
               params=N),
    CatalogRow(19, "SL(2n)", "phi_1 + phi_2", "n*(2*n+1)", 1, (("A", "2*n-1"),), "C_{n-1}+R_{2n-1}",
               (("C", "n-1"),), True, invariant_degrees=("n",), params=N),
    CatalogRow(20, "SO(8)", "phi_1 + phi_3", "16", 2, (("D", "4"),), "G_2", (("G", "2"),),
               invariant_degrees=("2", "2")),
    CatalogRow(21, "Sp(2n) x K*", "phi_1 eps + phi_1 eps^-1", "4*n", 1, (("C", "n"), ("t", "1")),
               "C_{n-1}+t_1", (("C", "n-1"), ("t", "1")), invariant_degrees=("2",), params=N),
    CatalogRow(22, "SL(n) x SL(m)", "phi_1 (x) phi_1", "n*m", 0, (("A", "n-1"), ("A", "m-1")),
               "A_{n-m-1}+A_{m-1}+R_{nm-m^2}", (("A", "n-m-1"), ("A", "m-1")), True,
               params={"n": 2, "m": 1}, constraint="n > m"),
    CatalogRow(23, "SL(n) x SL(n)", "phi_1 (x) phi_1", "n**2", 1, (("A", "n-1"), ("A", "n-1")), "A_{n-1}",
               (("A", "n-1"),), invariant_degrees=("n",), params=N2),
    CatalogRow(24, "SL(2) x Sp(2n)", "phi_1 (x) phi_1", "4*n", 1, (("A", "1"), ("C", "n")), "C_{n-1}+A_1",
               (("C", "n-1"), ("A", "1")), invariant_degrees=("2",), params=N),
    CatalogRow(25, "SL(3) x Sp(2n) x K*", "phi_1 (x) phi_1 (x) eps", "6*n", 0,
               (("A", "2"), ("C", "n"), ("t", "1")), "C_{n-2}+A_1+t_1+R_{2n-1}",
               (("C", "n-2"), ("A", "1"), ("t", "1")), True, params=N2),
    CatalogRow(26, "SL(4) x Sp(4)", "phi_1 (x) phi_1", "16", 1, (("A", "3"), ("C", "2")), "C_2",
               (("C", "2"),), invariant_degrees=("4",)),
    CatalogRow(27, "SL(n) x Sp(4)", "phi_1 (x) phi_1", "4*n", 0, (("A", "n-1"), ("C", "2")),
               "A_{n-5}+C_2+R_{4(n-4)}", (("A", "n-5"), ("C", "2")), True, params={"n": 5}),

    # Generic isotropy not tabulated
    CatalogRow(28, "SL(n) x SL(n) x K*", "phi_1 eps + phi_1 (x) psi_1", "n*(n+1)", 1,
               (("A", "n-1"), ("A", "n-1"), ("t", "1")), invariant_degrees=("n",), params=N),
    CatalogRow(29, "SL(n+1) x SL(n) x K*", "phi_1 eps^n + phi_1 (x) psi_1 eps^-1", "(n+1)**2", 1,
               (("A", "n"), ("A", "n-1"), ("t", "1")), params=N),
    CatalogRow(30, "SL(n+1) x SL(n) x K* x K*", "phi_1 eps_1 + phi_n (x) psi_{n-1} eps_2", "(n+1)**2", 0,
               (("A", "n"), ("A", "n-1"), ("t", "1"), ("t", "1")), params=N2),
    CatalogRow(31, "SL(n) x SL(m) x K*", "phi_1 eps^a + phi_1 (x) psi_1 eps^b", "n*(m+1)", 0,
               (("A", "n-1"), ("A", "m-1"), ("t", "1")), params={"n": 3, "m": 1}, constraint="n > m + 1"),
    CatalogRow(32, "SL(n) x SL(m) x K*", "phi_1 eps^a + phi_{n-1} (x) psi_{m-1} eps^b", "n*(m+1)", 0,
               (("A", "n-1"), ("A", "m-1"), ("t", "1")), params={"n": 4, "m": 2}, constraint="(n > m + 1) & (m + 1 > 2)"),
    CatalogRow(33, "SL(n) x SL(m) x K*", "phi_1 eps^a + phi_1 (x) psi_1 eps^b", "n*(m+1)", 0,
               (("A", "n-1"), ("A", "m-1"), ("t", "1")), params={"n": 1, "m": 2}, constraint="n < m"),
    CatalogRow(34, "SL(n) x SL(2) x SL(m)", "phi_1 (x) psi_1 + psi_1 (x) tau_1", "2*(n+m)", 0,
               (("A", "n-1"), ("A", "1"), ("A", "m-1")), params={"n": 3, "m": 3}),
    CatalogRow(35, "SL(n) x SL(2) x Sp(2m)", "phi_1 (x) psi_1 + psi_1 (x) tau_1", "2*(n+2*m)", 1,
               (("A", "n-1"), ("A", "1"), ("C", "m")), invariant_degrees=("2",), params={"n": 3, "m": 1}),
    CatalogRow(36, "Sp(2n) x SL(2) x Sp(2m)", "phi_1 (x) psi_1 + psi_1 (x) tau_1", "4*(m+n)", 2,
               (("C", "n"), ("A", "1"), ("C", "m")), invariant_degrees=("2", "2"), params=NM),
    CatalogRow(37, "SL(2) x Sp(2n) x K*", "phi_1 eps + phi_1 (x) psi_1", "2*(2*n+1)", 1,
               (("A", "1"), ("C", "n"), ("t", "1")), invariant_degrees=("2",), params=N),
)

CATALOG_BY_ID: Dict[int, CatalogRow] = {row.id: row for row in CATALOG}
