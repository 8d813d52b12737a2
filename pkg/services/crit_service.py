"""
Numeric critical-point and root-count verifications.

Lagrange-multiplier solutions for the quadric sum x_i^2 = c and for det = c,
plus companion-matrix and resultant oracles that count torus roots of generic
univariate and bivariate Laurent systems. Generic coefficients are complex
standard normals from numpy's seeded generator; degenerate samples raise
DegenerateSampleError and are resampled a bounded number of times.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import companion

from config.settings import settings
from core.constants import (
    ERROR_DEGENERATE_FUNCTIONAL,
    ERROR_RESIDUAL,
    ERROR_RESULTANT_VANISHES,
    ERROR_ROOT_CLUSTER,
)
from core.exceptions import DegenerateSampleError, InputError, PreconditionError
from core.logging_utils import get_structured_logger
from core.retry_utils import retry_with_resample
from models.laurent import PolySystem
from schemas.crit import CritReport
from services.geometry_service import GeometryService

logger = logging.getLogger(__name__)
structured_logger = get_structured_logger(__name__)

NEWTON_STEPS = 8


def _as_pairs(values: Iterable[complex]) -> List[List[float]]:
    return [[float(np.real(v)), float(np.imag(v))] for v in values]


def _check_clusters(roots: np.ndarray, seed: Optional[int]):
    """Raise when two roots are closer than the configured separation (relative)"""
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            scale = max(1.0, abs(roots[i]), abs(roots[j]))
            if abs(roots[i] - roots[j]) < settings.CLUSTER_SEPARATION * scale:
                raise DegenerateSampleError(f"{ERROR_ROOT_CLUSTER}: {roots[i]} and {roots[j]}", seed)


def _relative_residual(p: "_NumericPoly", q: "_NumericPoly", x: complex, y: complex) -> float:
    return max(abs(p(x, y)) / max(p.magnitude(x, y), 1e-300), abs(q(x, y)) / max(q.magnitude(x, y), 1e-300))


def _same_point(a: Tuple[complex, complex], b: Tuple[complex, complex]) -> bool:
    scale = max(1.0, abs(a[0]), abs(a[1]), abs(b[0]), abs(b[1]))
    return max(abs(a[0] - b[0]), abs(a[1] - b[1])) < settings.CLUSTER_SEPARATION * scale


def torus_roots(coefficients: Sequence[complex], seed: Optional[int] = None,
                separated: bool = True) -> np.ndarray:
    """
    Nonzero roots of sum_j a_j x^j (coefficients lowest degree first).

    Leading zeros are trimmed; low-order zeros are roots at the origin and are
    dropped, as are eigenvalues below ZERO_CUTOFF. With separated=True a root
    cluster raises DegenerateSampleError; otherwise repeated roots are kept.
    """
    coeffs = np.asarray(coefficients, dtype=complex)
    scale = np.max(np.abs(coeffs)) if coeffs.size else 0.0
    if scale == 0:
        raise DegenerateSampleError("Polynomial vanishes identically", seed)
    nonzero = np.flatnonzero(np.abs(coeffs) > settings.ZERO_CUTOFF * scale)
    coeffs = coeffs[nonzero[0]:nonzero[-1] + 1]
    if coeffs.size < 2:
        return np.zeros(0, dtype=complex)

    # scipy wants the highest degree first with a nonzero leading coefficient
    roots = np.linalg.eigvals(companion(coeffs[::-1]))
    roots = roots[np.abs(roots) > settings.ZERO_CUTOFF]
    if separated:
        _check_clusters(roots, seed)
    return roots


@dataclass
class _NumericPoly:
    """Complex polynomial in two variables with nonnegative exponents"""
    exponents: np.ndarray  # shape (terms, 2)
    coefficients: np.ndarray

    def __call__(self, x: complex, y: complex) -> complex:
        return complex(np.sum(self.coefficients * x ** self.exponents[:, 0] * y ** self.exponents[:, 1]))

    def magnitude(self, x: complex, y: complex) -> float:
        return float(np.sum(np.abs(self.coefficients) * abs(x) ** self.exponents[:, 0] * abs(y) ** self.exponents[:, 1]))

    def gradient(self, x: complex, y: complex) -> Tuple[complex, complex]:
        a, b = self.exponents[:, 0], self.exponents[:, 1]
        dx = np.sum(self.coefficients * a * x ** np.maximum(a - 1, 0) * y ** b)
        dy = np.sum(self.coefficients * b * x ** a * y ** np.maximum(b - 1, 0))
        return complex(dx), complex(dy)

    def degree(self, variable: int) -> int:
        return int(self.exponents[:, variable].max())

    def y_coefficients(self, x: complex) -> np.ndarray:
        """Coefficients of the polynomial in y at fixed x, lowest degree first"""
        out = np.zeros(self.degree(1) + 1, dtype=complex)
        for (a, b), c in zip(self.exponents, self.coefficients):
            out[b] += c * x ** a
        return out


def _sylvester(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Sylvester matrix of two univariate polynomials given lowest degree first"""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    matrix = np.zeros((size, size), dtype=complex)
    for row in range(n):
        matrix[row, row:row + m + 1] = p[::-1]
    for row in range(m):
        matrix[n + row, row:row + n + 1] = q[::-1]
    return matrix


class CritService:
    """Numeric verification of critical-point and root counts"""

    # -------------------------------------------------------------------------
    # Generic samples
    # -------------------------------------------------------------------------

    @staticmethod
    def generic_functional(n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)

    @staticmethod
    def generic_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))

    # -------------------------------------------------------------------------
    # Lagrange multipliers
    # -------------------------------------------------------------------------

    @staticmethod
    def quadric_crit(f: Sequence[complex], c: complex = 1.0, tol: Optional[float] = None,
                     seed: Optional[int] = None) -> CritReport:
        """
        Critical points of x -> sum f_i x_i on sum x_i^2 = c.

        grad f = lambda grad Q gives x = f / (2 lambda) and lambda^2 = Q(f/2) / c.
        """
        tol = settings.RESIDUAL_TOL if tol is None else tol
        f = np.asarray(f, dtype=complex)
        if f.ndim != 1 or f.size < 2:
            raise InputError(f"Functional needs at least 2 coordinates, got shape {f.shape}")
        if not np.all(np.isfinite(f)) or not np.isfinite(c):
            raise InputError("Functional and level must be finite")
        if c == 0:
            raise InputError("Level c must be nonzero")

        q = np.sum((f / 2) ** 2)
        if abs(q) < settings.ZERO_CUTOFF * max(1.0, float(np.sum(np.abs(f / 2) ** 2))):
            raise DegenerateSampleError(f"{ERROR_DEGENERATE_FUNCTIONAL}: Q(f/2) = 0", seed)

        root = np.sqrt(q / c)
        points, residual = [], 0.0
        for lam in (root, -root):
            x = f / (2 * lam)
            constraint = abs(np.sum(x ** 2) - c) / abs(c)
            colinear = np.linalg.norm(f - 2 * lam * x) / np.linalg.norm(f)
            residual = max(residual, float(constraint), float(colinear))
            points.append(x)

        if residual > tol:
            raise DegenerateSampleError(f"{ERROR_RESIDUAL}: {residual:.3e}", seed)
        return CritReport(
            count=len(points),
            points=[_as_pairs(x) for x in points],
            max_residual=residual,
            seed=seed,
        )

    @staticmethod
    def det_crit(F: Sequence[Sequence[complex]], c: complex = 1.0, tol: Optional[float] = None,
                 seed: Optional[int] = None) -> CritReport:
        """
        Critical points of M -> trace(F M) on det M = c.

        F = lambda det(M) M^-1 gives M = lambda c F^-1 with lambda^n = det(F) / c^(n-1).
        """
        tol = settings.RESIDUAL_TOL if tol is None else tol
        F = np.asarray(F, dtype=complex)
        if F.ndim != 2 or F.shape[0] != F.shape[1] or F.shape[0] < 1:
            raise InputError(f"F must be a square matrix, got shape {F.shape}")
        if not np.all(np.isfinite(F)) or not np.isfinite(c):
            raise InputError("Matrix and level must be finite")
        if c == 0:
            raise InputError("Level c must be nonzero")

        n = F.shape[0]
        if np.linalg.cond(F) > 1 / settings.ZERO_CUTOFF:
            raise DegenerateSampleError(f"{ERROR_DEGENERATE_FUNCTIONAL}: F is singular", seed)
        F_inv = np.linalg.inv(F)
        target = np.linalg.det(F) / c ** (n - 1)

        modulus = abs(target) ** (1.0 / n)
        phase = np.angle(target)
        points, residual = [], 0.0
        for k in range(n):
            lam = modulus * np.exp(1j * (phase + 2 * np.pi * k) / n)
            M = lam * c * F_inv
            det_m = np.linalg.det(M)
            constraint = abs(det_m - c) / abs(c)
            colinear = np.linalg.norm(F - lam * det_m * np.linalg.inv(M)) / np.linalg.norm(F)
            residual = max(residual, float(constraint), float(colinear))
            points.append(M)

        if residual > tol:
            raise DegenerateSampleError(f"{ERROR_RESIDUAL}: {residual:.3e}", seed)
        return CritReport(
            count=len(points),
            points=[_as_pairs(M.ravel()) for M in points],
            max_residual=residual,
            seed=seed,
        )

    @classmethod
    def random_quadric_crit(cls, n: int, seed: int = 0, c: complex = 1.0,
                            tol: Optional[float] = None) -> CritReport:
        return cls._resampled(
            lambda s: cls.quadric_crit(cls.generic_functional(n, np.random.default_rng(s)), c, tol, s), seed
        )

    @classmethod
    def random_det_crit(cls, n: int, seed: int = 0, c: complex = 1.0,
                        tol: Optional[float] = None) -> CritReport:
        return cls._resampled(
            lambda s: cls.det_crit(cls.generic_matrix(n, np.random.default_rng(s)), c, tol, s), seed
        )

    # -------------------------------------------------------------------------
    # Root-count oracles
    # -------------------------------------------------------------------------

    @staticmethod
    def _resampled(func, seed: int) -> CritReport:
        attempts = []

        def attempt(attempt_seed: int) -> CritReport:
            attempts.append(attempt_seed)
            return func(attempt_seed)

        report = retry_with_resample(attempt, seed, max_retries=settings.MAX_RESAMPLES)
        report.attempts = len(attempts)
        return report

    @staticmethod
    def _clean_support(support: Iterable[int]) -> List[int]:
        cleaned = sorted({int(a) for a in support})
        if len(cleaned) < 2:
            raise InputError(f"Support needs at least two exponents, got {cleaned}")
        return cleaned

    @classmethod
    def univariate_crit_report(cls, support: Iterable[int], seed: int = 0) -> CritReport:
        """Nonzero roots of x F'(x) for a generic F with the given support"""
        exponents = cls._clean_support(support)
        low, high = exponents[0], exponents[-1]
        if not low < 0 < high:
            raise PreconditionError(f"0 is not strictly inside [{low}, {high}]")

        def attempt(s: int) -> CritReport:
            coefficients = cls.generic_functional(len(exponents), np.random.default_rng(s))
            shifted = np.zeros(high - low + 1, dtype=complex)
            for w, a in zip(exponents, coefficients):
                shifted[w - low] = w * a
            roots = torus_roots(shifted, s)
            return CritReport(count=len(roots), points=[_as_pairs([r]) for r in roots], max_residual=0.0, seed=s)

        return cls._resampled(attempt, seed)

    @classmethod
    def univariate_crit_count(cls, support: Iterable[int], seed: int = 0) -> int:
        return cls.univariate_crit_report(support, seed).count

    @classmethod
    def univariate_root_count(cls, support: Iterable[int], seed: int = 0) -> int:
        """Nonzero roots of a generic F with the given support (the dimension-1 BKK oracle)"""
        exponents = cls._clean_support(support)
        low, high = exponents[0], exponents[-1]

        def attempt(s: int) -> CritReport:
            coefficients = cls.generic_functional(len(exponents), np.random.default_rng(s))
            shifted = np.zeros(high - low + 1, dtype=complex)
            for w, a in zip(exponents, coefficients):
                shifted[w - low] = a
            roots = torus_roots(shifted, s)
            return CritReport(count=len(roots), max_residual=0.0, seed=s)

        return cls._resampled(attempt, seed).count

    @staticmethod
    def _numeric_system(supports: Sequence[Sequence[Tuple[int, int]]], rng: np.random.Generator) -> List[_NumericPoly]:
        polys = []
        for support in supports:
            exponents = np.array(support, dtype=int)
            exponents = exponents - exponents.min(axis=0)
            coefficients = rng.standard_normal(len(exponents)) + 1j * rng.standard_normal(len(exponents))
            polys.append(_NumericPoly(exponents, coefficients))
        return polys

    @staticmethod
    def _resultant_in_y(p: _NumericPoly, q: _NumericPoly, seed: int) -> np.ndarray:
        """
        Coefficients (lowest first) of Res_y(p, q) as a polynomial in x.

        Evaluated at the N-th roots of unity, N above the degree bound, and
        interpolated with the FFT.
        """
        bound = p.degree(0) * q.degree(1) + p.degree(1) * q.degree(0)
        size = bound + 1
        nodes = np.exp(2j * np.pi * np.arange(size) / size)
        values = np.array([np.linalg.det(_sylvester(p.y_coefficients(x), q.y_coefficients(x))) for x in nodes])
        coefficients = np.fft.fft(values) / size
        if np.max(np.abs(coefficients)) < settings.ZERO_CUTOFF:
            raise DegenerateSampleError(ERROR_RESULTANT_VANISHES, seed)
        return coefficients

    @staticmethod
    def _newton_polish(p: _NumericPoly, q: _NumericPoly, x: complex, y: complex) -> Tuple[complex, complex]:
        for _ in range(NEWTON_STEPS):
            (px, py), (qx, qy) = p.gradient(x, y), q.gradient(x, y)
            jacobian = np.array([[px, py], [qx, qy]])
            try:
                step = np.linalg.solve(jacobian, -np.array([p(x, y), q(x, y)]))
            except np.linalg.LinAlgError:
                break
            x, y = x + step[0], y + step[1]
        return x, y

    @classmethod
    def bivariate_root_report(cls, system: PolySystem, seed: int = 0, tol: Optional[float] = None) -> CritReport:
        """
        Torus solutions of a generic system with the supports of the given pair.

        Eliminates y with the Sylvester resultant and finds its nonzero roots
        with a companion matrix. Every y root of p above every x root is
        polished with Newton steps; verified solutions are de-duplicated, so
        resultant roots shared by several solutions (x, y) and (x, y') are
        counted once per solution. The distinct solutions must account for
        every resultant root.
        """
        tol = settings.RESIDUAL_TOL if tol is None else tol
        if system.num_vars != 2 or len(system.polys) != 2:
            raise InputError(f"Bivariate oracle needs 2 polynomials in 2 variables, got {len(system.polys)} in {system.num_vars}")
        supports = []
        for i, poly in enumerate(system.polys):
            support = [tuple(e) for e in poly.support]
            if GeometryService.affine_dimension(support) < 2:
                raise PreconditionError(f"Support of polynomial {i} is not 2-dimensional")
            supports.append(support)

        def attempt(s: int) -> CritReport:
            p, q = cls._numeric_system(supports, np.random.default_rng(s))
            xs = torus_roots(cls._resultant_in_y(p, q, s), s, separated=False)

            solutions, residual = [], 0.0
            with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
                for x0 in xs:
                    for y0 in torus_roots(p.y_coefficients(x0), s, separated=False):
                        x1, y1 = cls._newton_polish(p, q, x0, y0)
                        err = _relative_residual(p, q, x1, y1)
                        if not err <= tol or min(abs(x1), abs(y1)) < settings.ZERO_CUTOFF:
                            continue
                        if any(_same_point((x1, y1), known) for known in solutions):
                            continue
                        residual = max(residual, err)
                        solutions.append((x1, y1))

            if len(solutions) != len(xs):
                raise DegenerateSampleError(
                    f"{ERROR_ROOT_CLUSTER}: {len(solutions)} distinct solutions for {len(xs)} resultant roots", s
                )
            return CritReport(
                count=len(solutions),
                points=[_as_pairs(point) for point in solutions],
                max_residual=residual,
                seed=s,
            )

        report = cls._resampled(attempt, seed)
        structured_logger.debug("Bivariate root count", count=report.count, seed=report.seed, attempts=report.attempts)
        return report

    @classmethod
    def bivariate_root_count(cls, system: PolySystem, seed: int = 0) -> int:
        return cls.bivariate_root_report(system, seed).count
