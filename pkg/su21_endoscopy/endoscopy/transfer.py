# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""The endoscopic group, the transfer factor and the character identity."""

import logging
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from ..algebra import ComplexMatrix3, GroupElement, certify
from ..errors import ConstraintViolationError, UnmatchedPairError
from ..roots import RHO, Weight, WeylElement, even_elements, weyl_act
from .characters import Q_G, Q_H, KappaCharacter, ds_character, stable_h_character
from .conventions import (
    LOCKED_CONVENTIONS,
    CharacterArgument,
    DenominatorPhase,
    SignPlacement,
    TransferConventions,
    all_conventions,
)
from .torus import (
    RHO_H,
    EllipticElement,
    h_denominator,
    h_unnormalized_denominator,
    unnormalized_denominator,
    weyl_denominator,
)

logger = logging.getLogger(__name__)

MATCH_TOL = 1e-12


def default_xi() -> Weight:
    """xi = rho - rho_H."""
    return RHO - RHO_H


@dataclass(frozen=True)
class EndoscopicElement:
    """(u, v, w) in S(U(1,1) x U(1)) with its image in SU(2,1)."""

    u: complex
    v: complex
    w: tuple[tuple[float, float], tuple[float, float]]
    embedded: GroupElement
    printed_constraint: bool
    """Whether u v = 1 also holds."""


def embed_H(u: complex, v: complex, w, tol: float = 1e-12) -> EndoscopicElement:
    """Embed (u, v, w) as [[u a, i u b, 0], [-i u c, u d, 0], [0, 0, v]].

    The determinant of the image is u^2 v, so u^2 v = 1 is enforced.

    Raises:
        ConstraintViolationError: if |u| or |v| differs from 1, det w from 1,
            or u^2 v from 1, beyond tol.
    """
    u, v = complex(u), complex(v)
    (a, b), (c, d) = np.asarray(w, dtype=float)
    if abs(abs(u) - 1) > tol or abs(abs(v) - 1) > tol:
        raise ConstraintViolationError("u and v must be unit complex numbers.")
    if abs(a * d - b * c - 1) > tol:
        raise ConstraintViolationError(f"det w = {a * d - b * c}, expected 1.")
    if abs(u * u * v - 1) > tol:
        raise ConstraintViolationError(f"u^2 v = {u * u * v}, expected 1.")
    printed = abs(u * v - 1) <= tol
    if not printed:
        logger.warning(
            "Printed constraint u v = 1 fails (u v = %s); u^2 v = 1 holds.", u * v
        )
    matrix = np.array(
        [[u * a, 1j * u * b, 0], [-1j * u * c, u * d, 0], [0, 0, v]], dtype=complex
    )
    return EndoscopicElement(
        u=u,
        v=v,
        w=((float(a), float(b)), (float(c), float(d))),
        embedded=certify(ComplexMatrix3.from_array(matrix, tol), tol),
        printed_constraint=printed,
    )


def require_matched(gamma: EllipticElement, gamma_h: EllipticElement) -> None:
    """Raise ``UnmatchedPairError`` unless both have the same eigenvalues."""
    for theta, theta_h in zip(gamma.angles, gamma_h.angles):
        if abs(np.exp(1j * theta) - np.exp(1j * theta_h)) > MATCH_TOL:
            raise UnmatchedPairError(
                f"{gamma_h.angles} does not match {gamma.angles}."
            )


def chi_weight(xi: Weight) -> Weight:
    """rho - rho_H + xi, the exponent of chi_{G,H}(gamma^-1)."""
    return RHO - RHO_H + xi


def chi_value(gamma: EllipticElement, xi: Weight) -> complex:
    """chi_{G,H}(gamma) = gamma^-(rho - rho_H + xi)."""
    return gamma.monomial(-chi_weight(xi))


def chi_fiber_values(gamma: EllipticElement, xi: Weight) -> tuple[complex, complex]:
    """chi at the two preimages of gamma in the two-fold cover."""
    return chi_value(gamma, xi), chi_value(gamma.shifted(1), xi)


def chi_is_fiber_invariant(xi: Weight) -> bool:
    """Exact check: chi is trivial on the fibre iff its exponent is integral."""
    return chi_weight(xi).is_integral


def transfer_factor(
    gamma: EllipticElement,
    gamma_h: EllipticElement,
    xi: Weight,
    conventions: TransferConventions = LOCKED_CONVENTIONS,
) -> complex:
    """Transfer factor at a matched pair.

    Delta(gamma, gamma_H) = (-1)^{q(G)+q(H)} chi(gamma) D_B(gamma^-1) divided
    by D_{B_H}(gamma_H^-1).

    Raises:
        IrregularElementError: if gamma or gamma_H is not regular.
        UnmatchedPairError: if gamma_H does not match gamma.
    """
    gamma.require_regular()
    require_matched(gamma, gamma_h)
    inverse, inverse_h = gamma.inverse(), gamma_h.inverse()
    if conventions.denominator_phase is DenominatorPhase.UNNORMALIZED:
        ratio = unnormalized_denominator(inverse) / h_unnormalized_denominator(
            inverse_h
        )
    else:
        ratio = weyl_denominator(inverse) / h_denominator(inverse_h)
    sign = (-1) ** (Q_G + Q_H)
    if conventions.sign_placement is SignPlacement.OMITTED:
        sign = 1
    return sign * chi_value(gamma, xi) * ratio


@dataclass(frozen=True)
class TransferRow:
    """Both sides of the identity at one grid point and one even w."""

    angles: tuple[float, float, float]
    w: str
    lhs: complex
    rhs: complex

    @property
    def residual(self) -> float:
        """|lhs - rhs|."""
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class TransferReport:
    """Residuals of Delta Theta_{w mu} = kappa(w)^-1 SO^H_{w mu + xi} on a grid."""

    mu: Weight
    xi: Weight
    conventions: TransferConventions
    rows: list[TransferRow] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        """Largest residual, 0 for an empty grid."""
        return max((row.residual for row in self.rows), default=0.0)

    def to_dict(self) -> dict:
        """Report payload."""
        return {
            "mu": str(self.mu),
            "xi": str(self.xi),
            "conventions_manifest": self.conventions.to_dict(),
            "grid": [
                {
                    "angles": list(row.angles),
                    "w": row.w,
                    "lhs": row.lhs,
                    "rhs": row.rhs,
                    "residual": row.residual,
                }
                for row in self.rows
            ],
            "max_residual": self.max_residual,
        }


def transfer_identity_check(
    mu: Weight,
    xi: Weight,
    grid: list[EllipticElement],
    conventions: TransferConventions = LOCKED_CONVENTIONS,
    kappa: KappaCharacter | None = None,
    kappa_values: Mapping[WeylElement, int] | None = None,
) -> TransferReport:
    """Evaluate both sides of the transfer identity for every grid point and even w.

    ``kappa_values`` overrides kappa(w) per even element; otherwise the values
    come from ``kappa`` (the reference character by default) through the
    coset identification of ``conventions``.
    """
    kappa = kappa or KappaCharacter.reference()
    rows = []
    for gamma in grid:
        gamma_h = gamma
        delta = transfer_factor(gamma, gamma_h, xi, conventions)
        if conventions.character_argument is CharacterArgument.INVERSE:
            argument, argument_h = gamma.inverse(), gamma_h.inverse()
        else:
            argument, argument_h = gamma, gamma_h
        for w in even_elements():
            weight = weyl_act(w, mu)
            if kappa_values is not None:
                value = kappa_values[w]
            else:
                value = kappa.on_weyl(w, conventions.coset_identification)
            rows.append(
                TransferRow(
                    angles=gamma.angles,
                    w=w.name,
                    lhs=delta * ds_character(weight, argument),
                    rhs=stable_h_character(weight, xi, argument_h) / value,
                )
            )
    return TransferReport(mu, xi, conventions, rows)


@dataclass(frozen=True)
class CalibrationManifest:
    """Residual of every convention combination and the selected one."""

    winner: TransferConventions
    residuals: dict[str, float]

    def to_dict(self) -> dict:
        """Manifest payload."""
        return {"winner": self.winner.to_dict(), "residuals": dict(self.residuals)}


def calibrate_conventions(
    mu: Weight,
    xi: Weight,
    grid: list[EllipticElement],
    kappa: KappaCharacter | None = None,
) -> CalibrationManifest:
    """Pick the convention combination with the smallest residual on ``grid``."""
    residuals = {}
    winner, best = None, np.inf
    for conventions in all_conventions():
        report = transfer_identity_check(mu, xi, grid, conventions, kappa)
        residual = report.max_residual
        residuals[conventions.label] = residual
        if residual < best:
            winner, best = conventions, residual
    logger.info("Calibrated conventions %s (residual %.3g).", winner.label, best)
    if winner != LOCKED_CONVENTIONS:
        logger.warning(
            "Calibration selected %s instead of the locked %s.",
            winner.label,
            LOCKED_CONVENTIONS.label,
        )
    return CalibrationManifest(winner, residuals)
