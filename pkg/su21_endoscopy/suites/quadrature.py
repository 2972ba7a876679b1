# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Orbital-integral suites for the elliptic and theta cases."""

import logging
from math import isfinite, pi

from ..errors import (
    DegenerateGammaError,
    LambdaOutOfRangeError,
    QuadratureNotConvergedError,
)
from ..quadrature import (
    DiagonalGamma,
    compare_elliptic,
    conjugated_matrix,
    dyadic_sequence,
    geodesic_grid,
    parity_fit,
    printed_corner_entry,
    random_elliptic_bump,
    random_gamma,
    second_differences,
    singular_fit,
    smooth_transfer_fH,
    theta_orbital_F,
    theta_transfer_fH,
)
from ..serializers.schemas import QuadratureResultSchema, SingularFitSchema
from .base import VerificationSuite

logger = logging.getLogger(__name__)

REFERENCE_GAMMA = (2.0, 1.0, 0.5)

DUPLICATE_FACTOR = 1.5
"""The duplicate Jacobian reading must miss by at least this factor somewhere."""

ANCHOR_RTOL = 0.05

SMOOTHNESS_POINTS = 32


class EllipticSuite(VerificationSuite):
    """Quadrature against the Jacobian closed form, and smoothness of f^H."""

    name = "elliptic"

    def _corner_entry(self, gamma: DiagonalGamma) -> None:
        a1, a2, a3 = gamma.entries
        x, y, z = 1.0, 1.0, 0.5
        corner = conjugated_matrix(gamma, x, y, z).to_array()[0, 2].real
        expected = (a1 - a3) * z + (a3 - a2) * x * y
        self._check("corner-entry", abs(corner - expected) <= 1e-12, corner - expected)
        printed = printed_corner_entry(gamma, x, y, z)
        if abs(printed - corner) > 1e-12:
            logger.warning(
                "Printed corner entry %.6g differs from u^-1 gamma u (%.6g).",
                printed,
                corner,
            )

    def run(self) -> dict:
        """Run the checks."""
        tol = self.config.quad_tol
        reference_bump = self.config.reference_elliptic_bump
        reference = DiagonalGamma(*REFERENCE_GAMMA)
        self._corner_entry(reference)

        comparisons = [compare_elliptic(reference, reference_bump, tol)]
        for _ in range(self.config.elliptic_pairs):
            gamma = random_gamma(self.rng, self.config.elliptic_gap)
            f = random_elliptic_bump(self.rng)
            comparisons.append(compare_elliptic(gamma, f, tol))
        unconverged = sum(not c.converged(tol) for c in comparisons)
        self._check("converged", unconverged == 0, unconverged)
        worst = max(c.relative_difference for c in comparisons)
        duplicate = max(c.duplicate_factor for c in comparisons)
        self._check("closed-form", worst <= self.config.elliptic_rtol, worst)
        self._check(
            "duplicate-reading-fails", duplicate >= DUPLICATE_FACTOR, duplicate
        )
        self._expect_error(
            "coincident",
            DegenerateGammaError,
            compare_elliptic,
            DiagonalGamma(1.0, 1.0, 1.0),
            reference_bump,
            tol,
        )

        grid, step = geodesic_grid(SMOOTHNESS_POINTS, REFERENCE_GAMMA)
        try:
            values = smooth_transfer_fH(grid, reference_bump, tol)
        except QuadratureNotConvergedError as e:
            self._check("smoothness", False, msg=str(e))
            values, discrepancy = [], None
        else:
            smoothness = second_differences(values, step, tol)
            discrepancy = smoothness.max_discrepancy
            self._check("smoothness", smoothness.bounded, discrepancy)
        return dict(
            comparisons=[
                dict(
                    gamma=list(c.gamma.entries),
                    quadrature=c.quadrature.value,
                    closed_form=c.closed_form.value,
                    relative_difference=c.relative_difference,
                    duplicate_factor=c.duplicate_factor,
                    converged=c.converged(tol),
                )
                for c in comparisons
            ],
            smoothness=dict(
                step=step,
                values=values,
                max_discrepancy=discrepancy,
            ),
        )


class ThetaSuite(VerificationSuite):
    """Singular expansion of the theta-case integral near lambda = 0."""

    name = "theta"

    def run(self) -> dict:
        """Run the checks."""
        tol = self.config.quad_tol
        f = self.config.reference_theta_bump
        start, stop = self.config.dyadic_range
        limit = self.config.condition_limit

        fits = {}
        for label, sign in (("positive", 1.0), ("negative", -1.0)):
            fit = singular_fit(f, dyadic_sequence(start, stop, sign), tol, limit)
            self._check(
                f"a-term[{label}]",
                fit.a_term_deviation <= ANCHOR_RTOL,
                fit.a_term_deviation,
            )
            self._check(f"no-growth[{label}]", not fit.growth, fit.trend_slope)
            fits[label] = SingularFitSchema().dump(fit)

        parity = parity_fit(f, dyadic_sequence(start, stop), tol, limit)
        self._check(
            "parity-anchor",
            parity.anchor_deviation <= ANCHOR_RTOL,
            parity.anchor_deviation,
        )

        at_one = theta_orbital_F(f, 1.0, tol)
        self._check(
            "lambda-one",
            isfinite(at_one.value) and at_one.error_estimate <= tol,
            at_one.error_estimate,
        )
        transfer = theta_transfer_fH(f, pi / 4, tol)
        self._check("transfer-finite", isfinite(abs(transfer)))
        self._expect_error(
            "lambda-zero", LambdaOutOfRangeError, theta_orbital_F, f, 0.0, tol
        )
        return dict(
            fits=fits,
            parity=dict(
                a_0=parity.a_0,
                b_0=parity.b_0,
                b_1=parity.b_1,
                anchor=parity.anchor,
                anchor_deviation=parity.anchor_deviation,
                h_limit=parity.h_limit,
                h_anchor=parity.h_anchor,
            ),
            lambda_one=QuadratureResultSchema().dump(at_one),
            transfer_at_quarter_turn=transfer,
        )
