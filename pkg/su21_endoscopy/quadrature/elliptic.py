# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Orbital integrals of diagonal elements over the upper unipotent group."""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..algebra import ComplexMatrix3
from ..errors import (
    DegenerateGammaError,
    QuadratureNotConvergedError,
    SupportUnboundedError,
)
from ..functions import BumpFactor, BumpFunction, Coordinate
from .cubature import ZERO_RESULT, CubatureRule, QuadratureResult, nested_cubature

logger = logging.getLogger(__name__)

MIN_GAP = 1e-6
"""Smallest eigenvalue gap accepted by the elliptic integrals."""

PRODUCT_TOL = 1e-12

MAX_LEVEL = 6
"""Deepest tanh-rule level, 129 nodes per axis."""


class GammaCase(Enum):
    """Regular diagonal elements versus ones with a repeated eigenvalue."""

    REGULAR = "regular"
    COINCIDENT = "coincident"


class JacobianReading(Enum):
    """Which Jacobian to divide by in the closed form."""

    PRODUCT = "product"
    """|a1 - a2| |a2 - a3| |a1 - a3|, forced by the conjugated matrix."""
    DUPLICATE = "duplicate"
    """|a1 - a2| |a2 - a3|^2, the factor |a2 - a3| taken twice."""


@dataclass(frozen=True)
class DiagonalGamma:
    """gamma = diag(a1, a2, a3) with a1 a2 a3 = 1."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        """Entries are nonzero and multiply to one."""
        if 0 in (self.a1, self.a2, self.a3):
            raise ValueError("Diagonal entries must be nonzero.")
        if abs(self.a1 * self.a2 * self.a3 - 1) > PRODUCT_TOL:
            raise ValueError("Diagonal entries must multiply to 1.")

    @classmethod
    def from_pair(cls, a1: float, a2: float) -> "DiagonalGamma":
        """Complete (a1, a2) with a3 = 1 / (a1 a2)."""
        return cls(a1, a2, 1.0 / (a1 * a2))

    @property
    def entries(self) -> tuple[float, float, float]:
        """(a1, a2, a3)."""
        return self.a1, self.a2, self.a3

    @property
    def gap(self) -> float:
        """Smallest pairwise distance between entries."""
        a1, a2, a3 = self.entries
        return min(abs(a1 - a2), abs(a2 - a3), abs(a1 - a3))

    @property
    def case(self) -> GammaCase:
        """COINCIDENT when two entries agree within PRODUCT_TOL."""
        return GammaCase.COINCIDENT if self.gap <= PRODUCT_TOL else GammaCase.REGULAR

    def jacobian(self, reading: JacobianReading = JacobianReading.PRODUCT) -> float:
        """Jacobian of (x, y, z) -> upper entries of u^-1 gamma u."""
        a1, a2, a3 = self.entries
        if reading is JacobianReading.DUPLICATE:
            return abs(a1 - a2) * abs(a2 - a3) ** 2
        return abs(a1 - a2) * abs(a2 - a3) * abs(a1 - a3)

    def matrix(self) -> ComplexMatrix3:
        """gamma as a float matrix."""
        return ComplexMatrix3.from_array(np.diag(self.entries))

    def swapped(self) -> "DiagonalGamma":
        """diag(a2, a1, a3)."""
        return DiagonalGamma(self.a2, self.a1, self.a3)


def _unipotent_batch(x, y, z) -> tuple[np.ndarray, np.ndarray]:
    """u(x, y, z) and its inverse I - N + N^2 for arrays of coordinates."""
    shape = np.broadcast(x, y, z).shape
    n = np.zeros(shape + (3, 3))
    n[..., 0, 1] = x
    n[..., 0, 2] = z
    n[..., 1, 2] = y
    eye = np.broadcast_to(np.eye(3), shape + (3, 3))
    square = n @ n
    return eye + n, eye - n + square


def conjugated_batch(gamma: DiagonalGamma, x, y, z) -> np.ndarray:
    """u^-1 gamma u by matrix multiplication for arrays of (x, y, z)."""
    u, u_inv = _unipotent_batch(x, y, z)
    return u_inv @ np.diag(gamma.entries) @ u


def conjugated_matrix(
    gamma: DiagonalGamma, x: float, y: float, z: float
) -> ComplexMatrix3:
    """u^-1 gamma u for the upper unipotent u with entries x, z (first row) and y."""
    u = ComplexMatrix3.from_array([[1, x, z], [0, 1, y], [0, 0, 1]])
    return u.inverse() @ gamma.matrix() @ u


def printed_corner_entry(gamma: DiagonalGamma, x: float, y: float, z: float) -> float:
    """The corner entry in its printed form (a1 - a3) z + a3 xy, kept for comparison."""
    return (gamma.a1 - gamma.a3) * z + gamma.a3 * x * y


def _upper_support(f: BumpFunction) -> tuple[tuple[float, float], ...]:
    intervals = []
    for coord in (Coordinate.RE01, Coordinate.RE12, Coordinate.RE02):
        interval = f.support_interval(coord)
        if interval is None:
            raise SupportUnboundedError(
                f"Test function has no factor on {coord.value}; "
                "the support preimage is unbounded."
            )
        intervals.append(interval)
    return tuple(intervals)


def _check_gamma(gamma: DiagonalGamma) -> None:
    if gamma.case is GammaCase.COINCIDENT or gamma.gap < MIN_GAP:
        raise DegenerateGammaError(
            f"Eigenvalue gap {gamma.gap:.3g} of {gamma.entries} is below {MIN_GAP}."
        )


def _sorted(a: float, b: float) -> tuple[float, float]:
    return (a, b) if a <= b else (b, a)


def elliptic_orbital_quadrature(
    gamma: DiagonalGamma, f: BumpFunction, tol: float, max_level: int = MAX_LEVEL
) -> QuadratureResult:
    """Integral of f(u^-1 gamma u) over the unipotent coordinates (x, y, z).

    The domain is the exact preimage of the support box: x and y are
    intervals, and for each (x, y) the corner entry is affine in z.

    Raises:
        DegenerateGammaError: if two eigenvalues are closer than MIN_GAP.
        SupportUnboundedError: if f does not confine every upper entry.
    """
    _check_gamma(gamma)
    (p_lo, p_hi), (q_lo, q_hi), (r_lo, r_hi) = _upper_support(f)
    if p_lo >= p_hi or q_lo >= q_hi or r_lo >= r_hi:
        return ZERO_RESULT
    a1, a2, a3 = gamma.entries
    x_bounds = _sorted(p_lo / (a1 - a2), p_hi / (a1 - a2))
    y_bounds = _sorted(q_lo / (a2 - a3), q_hi / (a2 - a3))

    def z_bounds(x, y):
        shift = (a3 - a2) * x * y
        lo = (r_lo - shift) / (a1 - a3)
        hi = (r_hi - shift) / (a1 - a3)
        return np.minimum(lo, hi), np.maximum(lo, hi)

    def integrand(x, y, z):
        return f.evaluate(conjugated_batch(gamma, x, y, z))

    return nested_cubature(
        integrand,
        x_bounds,
        y_bounds,
        z_bounds,
        tol,
        max_level=max_level,
        rule=CubatureRule.TANH,
    )


def elliptic_orbital_closed_form(
    gamma: DiagonalGamma,
    f: BumpFunction,
    tol: float,
    reading: JacobianReading = JacobianReading.PRODUCT,
    max_level: int = MAX_LEVEL,
) -> QuadratureResult:
    """Jacobian times the integral of f over diag(a) plus free upper entries.

    Raises:
        DegenerateGammaError: if two eigenvalues are closer than MIN_GAP.
        SupportUnboundedError: if f does not confine every upper entry.
    """
    _check_gamma(gamma)
    p_bounds, q_bounds, r_bounds = _upper_support(f)
    if any(lo >= hi for lo, hi in (p_bounds, q_bounds, r_bounds)):
        return ZERO_RESULT
    diagonal = np.diag(gamma.entries)

    def integrand(p, q, r):
        matrices = np.broadcast_to(diagonal, p.shape + (3, 3)).copy()
        matrices[..., 0, 1] = p
        matrices[..., 1, 2] = q
        matrices[..., 0, 2] = r
        return f.evaluate(matrices)

    result = nested_cubature(
        integrand,
        p_bounds,
        q_bounds,
        r_bounds,
        tol * gamma.jacobian(reading),
        max_level=max_level,
        rule=CubatureRule.TANH,
    )
    return result.scaled(1.0 / gamma.jacobian(reading))


@dataclass(frozen=True)
class EllipticComparison:
    """Quadrature against both closed-form readings for one (gamma, f) pair."""

    gamma: DiagonalGamma
    quadrature: QuadratureResult
    closed_form: QuadratureResult
    duplicate_reading: float

    @property
    def relative_difference(self) -> float:
        """|quadrature - closed form| relative to the closed form."""
        scale = max(abs(self.closed_form.value), np.finfo(float).tiny)
        return abs(self.quadrature.value - self.closed_form.value) / scale

    @property
    def duplicate_factor(self) -> float:
        """How far the duplicate reading is off, as a ratio >= 1."""
        if self.duplicate_reading == 0 or self.closed_form.value == 0:
            return 1.0
        ratio = abs(self.duplicate_reading / self.closed_form.value)
        return max(ratio, 1 / ratio)

    def converged(self, tol: float) -> bool:
        """Both integrals converged with error estimates within tol."""
        return all(
            result.converged and result.error_estimate <= tol
            for result in (self.quadrature, self.closed_form)
        )


def compare_elliptic(
    gamma: DiagonalGamma, f: BumpFunction, tol: float, max_level: int = MAX_LEVEL
) -> EllipticComparison:
    """Run both integrals and derive the duplicate reading from the closed form."""
    quadrature = elliptic_orbital_quadrature(gamma, f, tol, max_level)
    closed_form = elliptic_orbital_closed_form(gamma, f, tol, max_level=max_level)
    duplicate = (
        closed_form.value
        * gamma.jacobian(JacobianReading.PRODUCT)
        / gamma.jacobian(JacobianReading.DUPLICATE)
    )
    comparison = EllipticComparison(gamma, quadrature, closed_form, duplicate)
    if comparison.duplicate_factor > 1 + PRODUCT_TOL:
        logger.warning(
            "Duplicate |a2 - a3| Jacobian is off by a factor %.4g at %s.",
            comparison.duplicate_factor,
            gamma.entries,
        )
    return comparison


def smooth_transfer_fH(
    gamma_grid: list[DiagonalGamma],
    f: BumpFunction,
    tol: float,
    max_level: int = MAX_LEVEL,
) -> list[float]:
    """f^H(gamma) = Delta(gamma) O_gamma(f) on each grid point.

    O_gamma(f) is taken from the product-Jacobian closed form, so f^H is
    the box integral itself.

    Raises:
        QuadratureNotConvergedError: if a grid point misses tol.
    """
    values = []
    for gamma in gamma_grid:
        result = elliptic_orbital_closed_form(gamma, f, tol, max_level=max_level)
        if not result.converged or result.error_estimate > tol:
            raise QuadratureNotConvergedError(
                f"Orbital integral at {gamma.entries} has error estimate "
                f"{result.error_estimate:.3g} > {tol:.3g}."
            )
        values.append(gamma.jacobian() * result.value)
    return values


def geodesic_grid(
    points: int = 32,
    base: tuple[float, float, float] = (2.0, 1.0, 0.5),
    half_width: float = 0.5,
) -> tuple[list[DiagonalGamma], float]:
    """diag(b1 e^s, b2, b3 e^-s) for equally spaced s in [-half_width, half_width]."""
    s_values = np.linspace(-half_width, half_width, points)
    b1, b2, b3 = base
    grid = [DiagonalGamma(b1 * np.exp(s), b2, b3 * np.exp(-s)) for s in s_values]
    return grid, float(s_values[1] - s_values[0])


@dataclass(frozen=True)
class SmoothnessReport:
    """Second differences of f^H along a grid at steps h and 2h."""

    second_h: list[float]
    second_2h: list[float]
    noise_floor: float

    @property
    def max_discrepancy(self) -> float:
        """Largest |D2_h - D2_2h| over common interior points."""
        return max(
            (abs(a - b) for a, b in zip(self.second_h, self.second_2h)), default=0.0
        )

    @property
    def bounded(self) -> bool:
        """Second differences are finite and stable under halving the step."""
        values = self.second_h + self.second_2h
        if not all(np.isfinite(values)):
            return False
        scale = max((abs(v) for v in self.second_2h), default=0.0)
        return self.max_discrepancy <= 0.5 * scale + self.noise_floor


def second_differences(
    values: list[float], step: float, noise: float
) -> SmoothnessReport:
    """Finite-difference second derivatives at steps h and 2h on shared points."""
    v = np.asarray(values, dtype=float)
    centers = range(2, v.size - 2)
    second_h = [(v[i + 1] - 2 * v[i] + v[i - 1]) / step**2 for i in centers]
    second_2h = [(v[i + 2] - 2 * v[i] + v[i - 2]) / (2 * step) ** 2 for i in centers]
    return SmoothnessReport(second_h, second_2h, 8 * noise / step**2)


def random_gamma(
    rng: np.random.Generator, gap: float, low: float = 0.3, high: float = 3.0
) -> DiagonalGamma:
    """diag(a1, a2, 1/(a1 a2)) with a1, a2 uniform in [low, high] and gap >= ``gap``."""
    while True:
        a1, a2 = rng.uniform(low, high, size=2)
        gamma = DiagonalGamma.from_pair(float(a1), float(a2))
        if gamma.gap >= gap:
            return gamma


def random_elliptic_bump(rng: np.random.Generator) -> BumpFunction:
    """Bump on the three upper entries with a wide factor on the (1, 1) entry."""
    factors = [
        BumpFactor(
            coord=coord,
            center=float(rng.uniform(-0.5, 0.5)),
            radius=float(rng.uniform(0.5, 1.5)),
        )
        for coord in (Coordinate.RE01, Coordinate.RE12, Coordinate.RE02)
    ]
    factors.append(BumpFactor(coord=Coordinate.RE00, center=1.5, radius=3.0))
    return BumpFunction(factors=tuple(factors))
