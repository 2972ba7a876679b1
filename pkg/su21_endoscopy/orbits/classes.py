# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Classification of coadjoint B-orbits."""

from dataclasses import dataclass
from enum import Enum

from .coadjoint import BFunctional


class OrbitKind(Enum):
    """Strata of b* under the coadjoint action."""

    OMEGA_PLUS = "omega+"
    OMEGA_MINUS = "omega-"
    CYLINDER = "cylinder"
    HALF_PLANE_X_POS = "half-plane x>0"
    HALF_PLANE_X_NEG = "half-plane x<0"
    HALF_PLANE_Y_POS = "half-plane y>0"
    HALF_PLANE_Y_NEG = "half-plane y<0"
    ORIGIN = "origin"


@dataclass(frozen=True)
class OrbitClass:
    """An orbit stratum; cylinders carry alpha = xy, which may have either sign."""

    kind: OrbitKind
    alpha: float | None = None

    @property
    def name(self) -> str:
        """Stratum label."""
        return self.kind.value


def classify_orbit(functional: BFunctional, tol: float = 1e-9) -> OrbitClass:
    """Place F in one of the strata; every functional lands in exactly one."""
    if tol < 0:
        raise ValueError("Tolerance must be non-negative.")
    x, y, z = functional.x, functional.y, functional.z
    if z > tol:
        return OrbitClass(OrbitKind.OMEGA_PLUS)
    if z < -tol:
        return OrbitClass(OrbitKind.OMEGA_MINUS)
    alpha = x * y
    if abs(alpha) > tol:
        return OrbitClass(OrbitKind.CYLINDER, alpha)
    x_off, y_off = abs(x) > tol, abs(y) > tol
    if x_off and not y_off:
        kind = OrbitKind.HALF_PLANE_X_POS if x > 0 else OrbitKind.HALF_PLANE_X_NEG
        return OrbitClass(kind)
    if y_off and not x_off:
        kind = OrbitKind.HALF_PLANE_Y_POS if y > 0 else OrbitKind.HALF_PLANE_Y_NEG
        return OrbitClass(kind)
    if not x_off and not y_off:
        return OrbitClass(OrbitKind.ORIGIN)
    # |xy| <= tol with both |x|, |y| > tol: the product is tiny but nonzero
    return OrbitClass(OrbitKind.CYLINDER, alpha)
