# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Group elements of SU(2,1), the Cartan involution and the exponential map."""

from dataclasses import dataclass, replace
from math import ceil, log2

import numpy as np

from ..errors import NotBorelError
from .basis import I21, AlgebraElement, BasisChoice, borel_basis
from .matrices import ComplexMatrix3

PADE_ORDER = 6
"""Order of the diagonal Pade approximant used by ``mat_exp``."""

SCALED_NORM = 0.5
"""Inputs are scaled below this 1-norm before the Pade step."""

NULL_VECTOR = np.array([1.0, 0.0, 1.0], dtype=complex)
"""v0 = e1 + e3, the isotropic line fixed by the Borel subgroup."""


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A float matrix together with its SU(2,1) certification flag."""

    matrix: ComplexMatrix3
    certified: bool = False

    @classmethod
    def identity(cls) -> "GroupElement":
        """The certified identity."""
        return cls(ComplexMatrix3.identity(), True)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.matrix @ other.matrix, self.certified and other.certified
        )

    def inverse(self) -> "GroupElement":
        """Inverse, keeping the certification flag."""
        return GroupElement(self.matrix.inverse(), self.certified)

    def to_array(self) -> np.ndarray:
        """Entries as a complex array."""
        return self.matrix.to_array()


def membership_defect(g: ComplexMatrix3) -> float:
    """max(|g^dagger I21 g - I21|_max, |det g - 1|)."""
    form = I21 if g.is_exact else I21.to_float()
    defect = (g.dagger() @ form @ g - form).max_abs()
    return max(defect, abs(complex(g.det()) - 1))


def in_group(g: ComplexMatrix3 | GroupElement, tol: float) -> bool:
    """Whether g satisfies g^dagger I21 g = I21 and det g = 1 within tol."""
    if tol <= 0:
        raise ValueError("Tolerance must be positive.")
    matrix = g.matrix if isinstance(g, GroupElement) else g
    return membership_defect(matrix) <= tol


def certify(g: ComplexMatrix3, tol: float) -> GroupElement:
    """Wrap g as a group element, setting ``certified`` from ``in_group``."""
    matrix = g if not g.is_exact else g.to_float()
    return GroupElement(matrix, in_group(matrix, tol))


def cartan_involution(x: AlgebraElement | GroupElement):
    """Cartan involution: -x^dagger on the algebra, (g^dagger)^-1 on the group.

    Raises:
        SingularMatrixError: for a singular group matrix.
    """
    if isinstance(x, GroupElement):
        return replace(x, matrix=x.matrix.dagger().inverse())
    return AlgebraElement(-x.matrix.dagger(), x.label)


def _pade_coefficients(order: int) -> list[float]:
    coefficients = [1.0]
    for k in range(1, order + 1):
        coefficients.append(
            coefficients[-1] * (order - k + 1) / (k * (2 * order - k + 1))
        )
    return coefficients


def _nilpotent_exp(a: np.ndarray) -> np.ndarray | None:
    square = a @ a
    if np.any(square @ a != 0):
        return None
    return np.eye(3) + a + square / 2


def mat_exp(x: AlgebraElement | np.ndarray, tol: float = 1e-12) -> GroupElement:
    """Matrix exponential by scaling and squaring with a diagonal Pade step.

    Inputs with x^3 = 0 are evaluated by the terminating series
    I + x + x^2/2. The result is certified against ``tol``.
    """
    if isinstance(x, AlgebraElement):
        a = x.matrix.to_array()
    else:
        a = np.asarray(x, dtype=complex)
    result = _nilpotent_exp(a)
    if result is None:
        norm = np.linalg.norm(a, 1)
        steps = max(0, ceil(log2(norm / SCALED_NORM))) if norm > 0 else 0
        scaled = a / 2**steps
        coefficients = _pade_coefficients(PADE_ORDER)
        numerator = np.zeros((3, 3), dtype=complex)
        denominator = np.zeros((3, 3), dtype=complex)
        power = np.eye(3, dtype=complex)
        for k, c in enumerate(coefficients):
            numerator += c * power
            denominator += (-1) ** k * c * power
            power = power @ scaled
        result = np.linalg.solve(denominator, numerator)
        for _ in range(steps):
            result = result @ result
    return certify(ComplexMatrix3.from_array(result, tol), tol)


def random_algebra_member(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Random element of su(2,1) as a complex array."""
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    skew = (m - m.conj().T) / 2
    x = np.diag([1.0, 1.0, -1.0]) @ skew
    x -= np.trace(x) / 3 * np.eye(3)
    return scale * x


def random_group_element(
    rng: np.random.Generator, tol: float, factors: int = 3
) -> GroupElement:
    """Product of exponentials of random algebra members."""
    g = GroupElement.identity()
    for _ in range(factors):
        g = g @ mat_exp(random_algebra_member(rng), tol)
    return g


def borel_element(
    t: float,
    x: float,
    y: float,
    z: float,
    choice: BasisChoice = BasisChoice.CORRECTED,
    tol: float = 1e-12,
) -> GroupElement:
    """b = exp(tT) exp(xX + yY + zZ) in the chosen reading of the Borel generators."""
    basis = {name: e.matrix.to_array() for name, e in borel_basis(choice).items()}
    torus = mat_exp(t * basis["T"], tol)
    unipotent = mat_exp(x * basis["X"] + y * basis["Y"] + z * basis["Z"], tol)
    product = torus.matrix @ unipotent.matrix
    if choice is BasisChoice.PRINTED:
        return GroupElement(product, False)
    return certify(product, tol)


def is_borel(
    g: GroupElement, tol: float, choice: BasisChoice = BasisChoice.CORRECTED
) -> bool:
    """Whether g lies in the Borel subgroup MN.

    In the corrected reading g must be certified and fix the line of v0 with a
    unimodular eigenvalue. The printed generators span a real group fixing
    the same line with a positive eigenvalue.
    """
    if choice is BasisChoice.CORRECTED and not g.certified:
        return False
    image = g.to_array() @ NULL_VECTOR
    eigenvalue = image[0]
    if np.max(np.abs(image - eigenvalue * NULL_VECTOR)) > tol:
        return False
    if choice is BasisChoice.PRINTED:
        return abs(eigenvalue.imag) <= tol and eigenvalue.real > 0
    return abs(abs(eigenvalue) - 1) <= tol


def require_borel(
    g: GroupElement, tol: float, choice: BasisChoice = BasisChoice.CORRECTED
) -> None:
    """Raise ``NotBorelError`` unless ``is_borel`` holds."""
    if not is_borel(g, tol, choice):
        raise NotBorelError("Element is not in the Borel subgroup.")
