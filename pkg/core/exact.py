"""Exact integer and rational linear algebra helpers"""

import logging
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

from sympy import Matrix, Rational
from sympy.polys.domains import ZZ, QQ
from sympy.polys.matrices import DomainMatrix
from sympy.solvers.simplex import linprog, InfeasibleLPError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def to_fraction(value) -> Fraction:
    """Convert a sympy Rational (or int) to a Fraction"""
    if isinstance(value, Fraction):
        return value
    rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix"""
    n = len(rows)
    if n == 0:
        return 1
    matrix = DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (n, n), ZZ)
    return int(matrix.det())


def _qq_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    shape = (len(rows), len(rows[0]))
    return DomainMatrix([[QQ(int(v)) for v in row] for row in rows], shape, QQ)


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix"""
    if not rows or not rows[0]:
        return 0
    return int(_qq_matrix(rows).rank())


def pivot_columns(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Columns on which the row space projects isomorphically"""
    if not rows or not rows[0]:
        return ()
    _, pivots = _qq_matrix(rows).rref()
    return tuple(int(c) for c in pivots)


def primitive(vector: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries"""
    g = 0
    for v in vector:
        g = gcd(g, int(v))
    if g == 0:
        return tuple(int(v) for v in vector)
    return tuple(int(v) // g for v in vector)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def hyperplane_normal(points: Sequence[Sequence[int]]) -> Vector:
    """
    Integer normal of the hyperplane through k points of Z^k.

    Cofactor expansion of the (k-1) x k difference matrix; the zero vector
    means the points are affinely dependent.
    """
    k = len(points[0])
    if k == 1:
        return (1,)
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    normal = []
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in diffs]
        normal.append((-1) ** j * int_det(minor))
    return primitive(normal)


def simplex_volume(points: Sequence[Sequence[int]]) -> int:
    """Normalized volume |det(v_i - v_0)| of a lattice simplex with k + 1 vertices in Z^k"""
    base = points[0]
    return abs(int_det([sub(p, base) for p in points[1:]]))


def _convex_combination_constraints(target: Sequence[int], points: Sequence[Sequence[int]]):
    dim = len(target)
    rows = [[Rational(p[i]) for p in points] for i in range(dim)]
    rows.append([Rational(1)] * len(points))
    rhs = [Rational(t) for t in target] + [Rational(1)]
    return rows, rhs


def _minimize_on_equalities(objective: Sequence, rows: Sequence[Sequence], rhs: Sequence):
    """
    Minimize objective . x over x >= 0 with rows x = rhs, or None when infeasible.

    Each equality goes in as a pair of <= rows.
    """
    A = [list(row) for row in rows] + [[-v for v in row] for row in rows]
    b = list(rhs) + [-v for v in rhs]
    try:
        optimum, _ = linprog(Matrix([list(objective)]), A=A, b=b)
    except InfeasibleLPError:
        return None
    return optimum


def in_convex_hull(target: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """Exact feasibility of target = sum l_i p_i with l_i >= 0 and sum l_i = 1"""
    if not points:
        return False
    rows, rhs = _convex_combination_constraints(target, points)
    return _minimize_on_equalities([0] * len(points), rows, rhs) is not None


def strict_convex_combination(target: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """
    Exact test for target = sum l_i p_i with every l_i > 0 and sum l_i = 1.

    Substituting l_i = m_i + t with m_i, t >= 0 and maximizing t decides the
    strict case: the relative interior of conv(points) is exactly the set of
    strictly positive combinations of all points.
    """
    if not points:
        return False
    rows, rhs = _convex_combination_constraints(target, points)
    for row in rows:
        row.append(sum(row, Rational(0)))
    objective = [0] * len(points) + [-1]
    optimum = _minimize_on_equalities(objective, rows, rhs)
    if optimum is None:
        return False
    return to_fraction(-optimum) > 0


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a nonempty point list"""
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])
