# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Transfer, pairing-inversion and packet suites."""

from fractions import Fraction
from math import isfinite, pi

import numpy as np

from ..endoscopy import (
    LOCKED_CONVENTIONS,
    EllipticElement,
    KappaCharacter,
    LPacket,
    PairingTable,
    calibrate_conventions,
    chi_fiber_values,
    chi_is_fiber_invariant,
    default_xi,
    ds_character_G,
    embed_H,
    kappa_coefficients,
    klein_four_table,
    packet_report,
    pairing_inversion_check,
    pseudo_coefficient_combination,
    regular_grid,
    sigma_from_traces,
    stable_character_sum,
    stable_trace_assembly,
    transfer_factor,
    transfer_identity_check,
    two_element_table,
    zero_coefficients,
)
from ..endoscopy.characters import Q_G, Q_H
from ..errors import (
    ConstraintViolationError,
    IndexMismatchError,
    NonOrthogonalTableError,
    UnmatchedPairError,
)
from ..roots import CYCLE, IDENTITY, S12, Weight, even_elements, weyl_act
from .base import VerificationSuite

NON_VACUITY = 0.1
"""Residual every wrong convention or wrong kappa value must exceed."""

FIBER_POINTS = 100

REFERENCE_ANGLES = (pi / 2, 0.0, -pi / 2)

SECOND_MU = (1, 0, -1)

PACKET_GRID = 8


class TransferSuite(VerificationSuite):
    """Calibration and non-vacuity of the endoscopic transfer identity."""

    name = "transfer"

    def run(self) -> dict:
        """Run the checks."""
        margin = self.config.grid_margin
        calibration_grid = regular_grid(self.rng, self.config.calibration_grid, margin)
        grid = regular_grid(self.rng, self.config.transfer_grid, margin)
        mu, xi = Weight.of(*self.config.reference_mu), default_xi()
        kappa = KappaCharacter.reference()

        manifest = calibrate_conventions(mu, xi, calibration_grid, kappa)
        self._check("calibration-locked", manifest.winner == LOCKED_CONVENTIONS)
        report = transfer_identity_check(mu, xi, grid, manifest.winner, kappa)
        self._check(
            "identity",
            report.max_residual <= self.config.transfer_tol,
            report.max_residual,
        )

        for conventions in manifest.winner.perturbations():
            residual = transfer_identity_check(
                mu, xi, grid, conventions, kappa
            ).max_residual
            self._check(
                f"perturbed[{conventions.label}]", residual > NON_VACUITY, residual
            )
        flipped = {w: kappa.on_weyl(w) for w in even_elements()}
        flipped[CYCLE] = -flipped[CYCLE]
        residual = transfer_identity_check(
            mu, xi, grid, manifest.winner, kappa_values=flipped
        ).max_residual
        self._check("kappa-flipped", residual > NON_VACUITY, residual)

        fiber = max(
            abs(a - b)
            for a, b in (
                chi_fiber_values(gamma, xi)
                for gamma in regular_grid(self.rng, FIBER_POINTS, margin)
            )
        )
        self._check("chi-fiber", fiber <= self.config.structure_tol, fiber)
        self._check("chi-fiber-exact", chi_is_fiber_invariant(xi))
        self._check("sign", (-1) ** (Q_G + Q_H) == -1)

        phi = 0.7
        element = embed_H(np.exp(1j * phi), np.exp(-2j * phi), ((1, 0), (0, 1)))
        self._check("embed-H", element.embedded.certified)
        self._expect_error(
            "embed-H-determinant",
            ConstraintViolationError,
            embed_H,
            np.exp(1j * phi),
            np.exp(-1j * phi),
            ((1, 0), (0, 1)),
        )

        reference = EllipticElement(REFERENCE_ANGLES)
        delta = transfer_factor(reference, reference, xi, manifest.winner)
        self._check("delta-finite", isfinite(abs(delta)), abs(delta))
        self._expect_error(
            "unmatched",
            UnmatchedPairError,
            transfer_factor,
            reference,
            reference.conjugate(CYCLE),
            xi,
        )

        payload = report.to_dict()
        payload["calibration"] = manifest.to_dict()
        payload["delta_at_reference"] = delta
        return payload


class InversionSuite(VerificationSuite):
    """Recovery of traces from endoscopic sums in rational arithmetic."""

    name = "inversion"

    def _round_trip(self, table: PairingTable, traces, normalization) -> dict:
        sigma = sigma_from_traces(table, traces, normalization)
        result = pairing_inversion_check(table, sigma, normalization)
        recovered = result.recovered == [Fraction(t) for t in traces]
        self._check(f"inversion[{table.size}]", result.exact and recovered)
        return result.to_dict()

    def run(self) -> dict:
        """Run the checks."""
        tables = [
            self._round_trip(
                two_element_table(),
                (Fraction(3), Fraction(5, 2)),
                {"1": 1, "s": Fraction(-1, 2)},
            ),
            self._round_trip(
                klein_four_table(),
                (1, Fraction(2, 3), -3, 4),
                {"1": 1, "s1": 2, "s2": Fraction(1, 3), "s1s2": -1},
            ),
        ]
        repeated = PairingTable(
            ("1", "s", "t"),
            ("pi1", "pi2", "pi3"),
            ((1, 1, 1), (1, -1, 1), (1, -1, 1)),
        )
        self._expect_error(
            "repeated-row",
            NonOrthogonalTableError,
            pairing_inversion_check,
            repeated,
            (1, 0, 0),
        )

        mu = Weight.of(*self.config.reference_mu)
        combination = pseudo_coefficient_combination(
            mu, kappa_coefficients(KappaCharacter.reference())
        )
        gamma = EllipticElement(REFERENCE_ANGLES).inverse()
        traces = {w: ds_character_G(mu, w, gamma) for w in even_elements()}
        residual = combination.dual_residual(traces)
        self._check(
            "pseudo-coefficient-dual", residual <= self.config.structure_tol, residual
        )
        self._check(
            "pseudo-coefficient-zero",
            pseudo_coefficient_combination(mu, zero_coefficients()).is_zero,
        )
        partial = zero_coefficients()
        partial.pop((IDENTITY, CYCLE))
        self._expect_error(
            "pseudo-coefficient-keys",
            IndexMismatchError,
            pseudo_coefficient_combination,
            mu,
            partial,
        )
        return dict(
            tables=tables,
            pseudo_coefficients=combination.matrix().tolist(),
        )


class PacketSuite(VerificationSuite):
    """Stable and kappa-weighted sums over L-packets."""

    name = "packets"

    def run(self) -> dict:
        """Run the checks."""
        tol = self.config.structure_tol
        mu = Weight.of(*self.config.reference_mu)
        packets = [LPacket(mu), LPacket(Weight.of(*SECOND_MU))]
        grid = regular_grid(self.rng, PACKET_GRID, self.config.grid_margin)

        assembly = stable_trace_assembly(packets, KappaCharacter.reference(), grid)
        self._check(
            "kappa-orbital", assembly.max_residual <= tol, assembly.max_residual
        )
        self._check(
            "additivity",
            assembly.additivity_residual <= tol,
            assembly.additivity_residual,
        )
        trivial = stable_trace_assembly(packets, KappaCharacter.trivial(), grid)
        stable = max(
            abs(a - b)
            for row in trivial.rows
            for a, b in zip(row.packet_sums, row.stable_sums)
        )
        self._check("trivial-kappa-stable", stable <= tol, stable)
        relabelled = max(
            abs(
                stable_character_sum(mu, gamma)
                - stable_character_sum(weyl_act(S12, mu), gamma)
            )
            for gamma in grid
        )
        self._check("relabelling", relabelled <= tol, relabelled)

        reference = EllipticElement(REFERENCE_ANGLES)
        return dict(
            packets=[
                packet_report(p, reference, KappaCharacter.reference()) for p in packets
            ],
            max_residual=assembly.max_residual,
            additivity_residual=assembly.additivity_residual,
        )
