# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Coadjoint action of the Borel subgroup on b*."""

from dataclasses import dataclass

import numpy as np

from ..algebra import BasisChoice, GroupElement, borel_basis
from ..algebra.group import require_borel

BOREL_NAMES = ("T", "X", "Y", "Z")


@dataclass(frozen=True)
class BFunctional:
    """F = tT* + xX* + yY* + zZ* on the Borel algebra."""

    t: float
    x: float
    y: float
    z: float

    @classmethod
    def from_vector(cls, values) -> "BFunctional":
        """Build from a length-4 sequence (t, x, y, z)."""
        t, x, y, z = (float(v) for v in values)
        return cls(t, x, y, z)

    def to_vector(self) -> np.ndarray:
        """(t, x, y, z) as an array."""
        return np.array([self.t, self.x, self.y, self.z])


def _basis_arrays(choice: BasisChoice) -> list[np.ndarray]:
    basis = borel_basis(choice)
    return [basis[name].matrix.to_array() for name in BOREL_NAMES]


def ad_matrix(
    b: GroupElement, choice: BasisChoice = BasisChoice.CORRECTED
) -> np.ndarray:
    """Matrix M of Ad_{b^-1} on (T, X, Y, Z): b^-1 B_j b = sum_i M_ij B_i."""
    basis = _basis_arrays(choice)
    matrix = b.to_array()
    inverse = np.linalg.inv(matrix)
    system = np.stack([element.ravel() for element in basis], axis=1)
    columns = []
    for element in basis:
        image = (inverse @ element @ matrix).ravel()
        coefficients, *_ = np.linalg.lstsq(system, image, rcond=None)
        columns.append(coefficients.real)
    return np.stack(columns, axis=1)


def coadjoint_act(
    b: GroupElement,
    functional: BFunctional,
    tol: float = 1e-9,
    choice: BasisChoice = BasisChoice.CORRECTED,
) -> BFunctional:
    """(Ad*_b F)(xi) = F(Ad_{b^-1} xi), re-expanded in the dual basis.

    Raises:
        NotBorelError: if b is not in the Borel subgroup of the chosen reading.
    """
    require_borel(b, tol, choice)
    return BFunctional.from_vector(ad_matrix(b, choice).T @ functional.to_vector())
