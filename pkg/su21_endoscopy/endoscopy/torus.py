# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Regular elements of the compact Cartan and the Weyl denominators."""

from dataclasses import dataclass
from math import pi

import numpy as np

from ..errors import IrregularElementError
from ..roots import POSITIVE_ROOTS, RHO, Weight, WeylElement

REGULARITY_TOL = 1e-12
"""|sin(d/2)| at or below this counts as a vanishing root value."""

ANGLE_SUM_TOL = 1e-9

H_ROOT = Weight.of(0, 1, -1)
"""alpha_23, the positive root of the endoscopic group."""

RHO_H = H_ROOT.scale("1/2")


def _wrapped(value: float) -> float:
    """Representative of value modulo 2 pi in (-pi, pi]."""
    return pi - (pi - value) % (2 * pi)


@dataclass(frozen=True)
class EllipticElement:
    """gamma = diag(e^{i theta1}, e^{i theta2}, e^{i theta3}).

    The angle triple is kept as given: half-integral weights read the
    representative, not only the class modulo 2 pi.
    """

    angles: tuple[float, float, float]

    def __post_init__(self):
        """Angles sum to a multiple of 2 pi."""
        angles = tuple(float(a) for a in self.angles)
        if len(angles) != 3:
            raise ValueError("An elliptic element has three angles.")
        if abs(_wrapped(sum(angles))) > ANGLE_SUM_TOL:
            raise ValueError(f"Angles must sum to 0 mod 2 pi, got {sum(angles)}.")
        object.__setattr__(self, "angles", angles)

    @classmethod
    def from_pair(cls, theta1: float, theta2: float) -> "EllipticElement":
        """Complete (theta1, theta2) with theta3 = -theta1 - theta2."""
        return cls((theta1, theta2, -theta1 - theta2))

    def root_sine(self, weight: Weight) -> float:
        """sin(<alpha, theta> / 2)."""
        return float(np.sin(weight.dot(self.angles) / 2))

    def margin(self) -> float:
        """Smallest |2 sin(<alpha, theta>/2)| over the positive roots."""
        return min(abs(2 * self.root_sine(root.weight)) for root in POSITIVE_ROOTS)

    @property
    def regular(self) -> bool:
        """No root takes the value 1 on gamma."""
        return self.margin() > 2 * REGULARITY_TOL

    def require_regular(self) -> None:
        """Raise ``IrregularElementError`` unless regular."""
        if not self.regular:
            raise IrregularElementError(f"Element {self.angles} is not regular.")

    def inverse(self) -> "EllipticElement":
        """gamma^-1, with negated angles."""
        return EllipticElement(tuple(-a for a in self.angles))

    def conjugate(self, w: WeylElement) -> "EllipticElement":
        """w gamma w^-1, permuting the angles like weights."""
        return EllipticElement(w.act_angles(self.angles))

    def shifted(self, index: int, turns: int = 1) -> "EllipticElement":
        """The same element, angle index moved by 2 pi turns and the next one back."""
        angles = list(self.angles)
        angles[index] += 2 * pi * turns
        angles[(index + 1) % 3] -= 2 * pi * turns
        return EllipticElement(tuple(angles))

    def monomial(self, weight: Weight) -> complex:
        """gamma^lambda = exp(i <lambda, theta>)."""
        return complex(np.exp(1j * weight.dot(self.angles)))


def weyl_denominator(gamma: EllipticElement) -> complex:
    """Delta_B(gamma) = (2i)^3 sin((t1-t2)/2) sin((t3-t2)/2) sin((t3-t1)/2).

    Equal to gamma^rho prod_{alpha > 0}(1 - gamma^-alpha) since rho is integral.

    Raises:
        IrregularElementError: if gamma is not regular.
    """
    gamma.require_regular()
    product = 1.0
    for root in POSITIVE_ROOTS:
        product *= gamma.root_sine(root.weight)
    return (2j) ** 3 * product


def unnormalized_denominator(gamma: EllipticElement) -> complex:
    """prod over positive roots of (1 - gamma^-alpha), without the gamma^rho phase."""
    gamma.require_regular()
    product = 1.0 + 0j
    for root in POSITIVE_ROOTS:
        product *= 1 - gamma.monomial(-root.weight)
    return product


def rho_phase(gamma: EllipticElement) -> complex:
    """gamma^rho."""
    return gamma.monomial(RHO)


def h_denominator(gamma: EllipticElement) -> complex:
    """Delta_{B_H}(gamma) = 2i sin((theta2 - theta3)/2), from the single root alpha_23.

    Raises:
        IrregularElementError: if theta2 = theta3 mod 2 pi.
    """
    value = gamma.root_sine(H_ROOT)
    if abs(value) <= REGULARITY_TOL:
        raise IrregularElementError(f"Element {gamma.angles} is not regular for H.")
    return 2j * value


def h_unnormalized_denominator(gamma: EllipticElement) -> complex:
    """1 - gamma^-alpha_23."""
    h_denominator(gamma)
    return 1 - gamma.monomial(-H_ROOT)


def regular_grid(
    rng: np.random.Generator, points: int, margin: float = 0.1
) -> list[EllipticElement]:
    """Seeded random regular elements with every |2 sin(<alpha, theta>/2)| >= margin."""
    grid = []
    while len(grid) < points:
        theta1, theta2 = rng.uniform(-pi, pi, size=2)
        gamma = EllipticElement.from_pair(float(theta1), float(theta2))
        if gamma.margin() >= margin:
            grid.append(gamma)
    return grid
