# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Nested tensor-product cubature on triangular 3-D domains.

Two one-dimensional rules are available. Composite Gauss-Legendre panels
are exact on polynomials. The tanh-mapped trapezoid rule converges
geometrically in the node count for integrands that vanish to all orders
at both interval ends, which is the case for a bump integrated over the
exact preimage of its support.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

logger = logging.getLogger(__name__)

PANEL_ORDER = 8
"""Gauss-Legendre points per panel."""

TANH_HALF_WIDTH = 4.0
"""The tanh rule samples t in [-TANH_HALF_WIDTH, TANH_HALF_WIDTH]."""

CHUNK_POINTS = 1 << 18
"""Upper bound on integrand points evaluated at once."""

Bounds = tuple[float, float]
ZBounds = Bounds | Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class QuadratureResult:
    """Value of an integral with its error estimate."""

    value: float
    error_estimate: float
    evaluations: int
    converged: bool = True

    def __post_init__(self):
        """Error estimates are non-negative."""
        if self.error_estimate < 0:
            raise ValueError("Error estimate must be non-negative.")

    def scaled(self, factor: float) -> "QuadratureResult":
        """Multiply value and error estimate by a constant."""
        return QuadratureResult(
            self.value * factor,
            self.error_estimate * abs(factor),
            self.evaluations,
            self.converged,
        )


ZERO_RESULT = QuadratureResult(0.0, 0.0, 0)


def panel_rule(lo: float, hi: float, level: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite rule on [lo, hi] with 2**level panels of PANEL_ORDER points."""
    xi, wi = leggauss(PANEL_ORDER)
    edges = np.linspace(lo, hi, 2**level + 1)
    half = (edges[1:] - edges[:-1]) / 2
    middle = (edges[1:] + edges[:-1]) / 2
    nodes = (middle[:, None] + half[:, None] * xi[None, :]).ravel()
    weights = (half[:, None] * wi[None, :]).ravel()
    return nodes, weights


def tanh_rule(lo: float, hi: float, level: int) -> tuple[np.ndarray, np.ndarray]:
    """Trapezoid rule in t after s = tanh(t), with 2**(level + 1) + 1 nodes.

    The step is TANH_HALF_WIDTH / 2**level, so each level halves it and
    keeps every node of the previous one.
    """
    count = 2**level
    step = TANH_HALF_WIDTH / count
    t = step * np.arange(-count, count + 1)
    half = (hi - lo) / 2
    nodes = (hi + lo) / 2 + half * np.tanh(t)
    weights = step * half / np.cosh(t) ** 2
    return nodes, weights


class CubatureRule(Enum):
    """One-dimensional rule used along each axis of the tensor product."""

    GAUSS_LEGENDRE = "gauss-legendre"
    """Composite Gauss-Legendre panels, exact below degree 2 * PANEL_ORDER."""
    TANH = "tanh"
    """Tanh-mapped trapezoid rule, for integrands flat at both interval ends."""

    def nodes(self, lo: float, hi: float, level: int):
        """Nodes and weights on [lo, hi] at a refinement level."""
        if self is CubatureRule.TANH:
            return tanh_rule(lo, hi, level)
        return panel_rule(lo, hi, level)


def _z_bounds(z_bounds: ZBounds, x: np.ndarray, y: np.ndarray):
    if callable(z_bounds):
        return z_bounds(x, y)
    lo, hi = z_bounds
    return np.full(np.broadcast(x, y).shape, lo), np.full(np.broadcast(x, y).shape, hi)


def tensor_rule(
    integrand: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray],
    x_bounds: Bounds,
    y_bounds: Bounds,
    z_bounds: ZBounds,
    level: int,
    rule: CubatureRule = CubatureRule.GAUSS_LEGENDRE,
) -> tuple[float, int]:
    """One tensor-product rule; the z-interval may depend on (x, y).

    Each chunk is a broadcast (x, y, z) block of at most CHUNK_POINTS
    points. Chunks run over x in a fixed order so the sum is reproducible.
    """
    x_nodes, x_weights = rule.nodes(*x_bounds, level)
    y_nodes, y_weights = rule.nodes(*y_bounds, level)
    xi, wi = rule.nodes(-1.0, 1.0, level)
    per_slice = y_nodes.size * xi.size
    step = max(1, CHUNK_POINTS // per_slice)
    y = y_nodes[None, :, None]
    wy = y_weights[None, :, None]
    total = 0.0
    evaluations = 0
    for start in range(0, x_nodes.size, step):
        x = x_nodes[start : start + step, None, None]
        wx = x_weights[start : start + step, None, None]
        lo, hi = _z_bounds(z_bounds, x, y)
        half = (hi - lo) / 2
        z = (hi + lo) / 2 + half * xi[None, None, :]
        values = integrand(np.broadcast_to(x, z.shape), np.broadcast_to(y, z.shape), z)
        total += float(np.sum(values * (wx * wy * half) * wi[None, None, :]))
        evaluations += values.size
    return total, evaluations


def nested_cubature(
    integrand: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray],
    x_bounds: Bounds,
    y_bounds: Bounds,
    z_bounds: ZBounds,
    tol: float,
    min_level: int = 2,
    max_level: int = 5,
    rule: CubatureRule = CubatureRule.GAUSS_LEGENDRE,
) -> QuadratureResult:
    """Refine until consecutive rules agree within tol.

    The error estimate is |Q_L - Q_{L-1}| at the final level L. When
    max_level is reached first the result carries ``converged=False``.
    """
    if x_bounds[0] >= x_bounds[1] or y_bounds[0] >= y_bounds[1]:
        return ZERO_RESULT
    previous, evaluations = tensor_rule(
        integrand, x_bounds, y_bounds, z_bounds, min_level - 1, rule
    )
    error = np.inf
    for level in range(min_level, max_level + 1):
        current, count = tensor_rule(
            integrand, x_bounds, y_bounds, z_bounds, level, rule
        )
        evaluations += count
        error = abs(current - previous)
        logger.debug("Cubature level %d: %.16g (delta %.3g)", level, current, error)
        previous = current
        if error <= tol:
            return QuadratureResult(current, error, evaluations, True)
    logger.warning(
        "Cubature stopped at level %d with error estimate %.3g > %.3g.",
        max_level,
        error,
        tol,
    )
    return QuadratureResult(previous, error, evaluations, False)
