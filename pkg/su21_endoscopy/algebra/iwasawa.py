# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Iwasawa decomposition g = m a u k of SU(2,1)."""

from dataclasses import dataclass

import numpy as np

from ..errors import NotInGroupError
from .basis import corrected_basis
from .group import GroupElement, certify, in_group
from .matrices import ComplexMatrix3


@dataclass(frozen=True)
class IwasawaFactors:
    """Factors of g = m a u k with their coordinates."""

    m: GroupElement
    a: GroupElement
    u: GroupElement
    k: GroupElement
    psi: float
    """Angle of m = diag(e^{i psi}, e^{-2i psi}, e^{i psi})."""
    log_a: float
    """a = exp(log_a * H); the diagonal of a in the null basis is positive."""
    unipotent: tuple[float, float, float]
    """(x, y, z) with u = exp(xX + yY' + zZ')."""

    def recompose(self) -> ComplexMatrix3:
        """m a u k as a float matrix."""
        return (self.m @ self.a @ self.u @ self.k).matrix

    def deviation(self, g: GroupElement) -> float:
        """max |m a u k - g|."""
        return (self.recompose() - g.matrix).max_abs()

    def k_unitarity_defect(self) -> float:
        """max |k^dagger k - I|."""
        k = self.k.to_array()
        return float(np.max(np.abs(k.conj().T @ k - np.eye(3))))


def split_torus(log_a: float) -> np.ndarray:
    """exp(log_a * H) with H = E13 + E31."""
    c, s = np.cosh(log_a), np.sinh(log_a)
    return np.array([[c, 0, s], [0, 1, 0], [s, 0, c]], dtype=complex)


def compact_torus_m(psi: float) -> np.ndarray:
    """diag(e^{i psi}, e^{-2i psi}, e^{i psi}), the centraliser of A in K."""
    return np.diag(np.exp(1j * np.array([psi, -2 * psi, psi])))


def unipotent(x: float, y: float, z: float) -> np.ndarray:
    """exp(xX + yY' + zZ') by its terminating series."""
    basis = corrected_basis()
    n = (
        x * basis["X"].matrix.to_array()
        + y * basis["Y"].matrix.to_array()
        + z * basis["Z"].matrix.to_array()
    )
    return np.eye(3) + n + n @ n / 2


def iwasawa_decompose(g: GroupElement, tol: float) -> IwasawaFactors:
    """Decompose a certified element as g = m a u k.

    The A-parameter is read off the image of e3: writing
    g e3 = alpha v0 + beta e2 + gamma v1 in the null basis v0 = e1 + e3,
    v1 = e1 - e3, the v1 coefficient has modulus e^{-log_a}/2. The remaining
    phase is absorbed by M so that k[2, 2] is real and positive.

    Raises:
        NotInGroupError: if g is not a member of SU(2,1) within tol.
    """
    if not (g.certified or in_group(g, tol)):
        raise NotInGroupError("Iwasawa decomposition needs an element of SU(2,1).")
    matrix = g.to_array()
    w = matrix[:, 2]
    alpha = (w[0] + w[2]) / 2
    beta = w[1]
    gamma = (w[0] - w[2]) / 2

    log_a = -np.log(2 * abs(gamma))
    phase = -abs(gamma) / gamma
    x_minus_iy = -phase * beta
    x, y = x_minus_iy.real, -x_minus_iy.imag
    remainder = 2 * phase * alpha * np.exp(-log_a)
    z = -remainder.imag / 4

    a = split_torus(log_a)
    u0 = unipotent(x, y, z)
    k0 = np.linalg.solve(a @ u0, matrix)
    psi = float(np.angle(k0[2, 2]))
    m = compact_torus_m(psi)
    m_inv = m.conj()
    u = m_inv @ u0 @ m
    k = m_inv @ k0
    # conjugating by m rotates x - iy by e^{3i psi} and fixes z
    x_new, y_new = float(u[1, 0].real), float(-u[1, 0].imag)
    return IwasawaFactors(
        m=certify(ComplexMatrix3.from_array(m, tol), tol),
        a=certify(ComplexMatrix3.from_array(a, tol), tol),
        u=certify(ComplexMatrix3.from_array(u, tol), tol),
        k=certify(ComplexMatrix3.from_array(k, tol), tol),
        psi=psi,
        log_a=float(log_a),
        unipotent=(x_new, y_new, float(z)),
    )
