# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Weyl denominators, discrete series characters and packet sums."""

import math

import numpy as np
import pytest

from su21_endoscopy.endoscopy import (
    PRINTED_KAPPA,
    Q_G,
    Q_H,
    EllipticElement,
    KappaCharacter,
    LPacket,
    ds_character,
    ds_character_G,
    h_denominator,
    kappa_orbital_sum,
    kappa_reconciliation,
    packet_report,
    regular_grid,
    stable_character_sum,
    stable_trace_assembly,
    unnormalized_denominator,
    weyl_denominator,
)
from su21_endoscopy.errors import (
    ConstraintViolationError,
    IrregularElementError,
    IrregularParameterError,
)
from su21_endoscopy.roots import (
    CYCLE,
    CYCLE_SQUARED,
    IDENTITY,
    RHO,
    S12,
    Weight,
    weyl_act,
)


def test_angle_sum():
    """Angles must sum to zero modulo 2 pi."""
    with pytest.raises(ValueError):
        EllipticElement((0.1, 0.2, 0.3))
    assert EllipticElement((math.pi, math.pi, 0.0)).angles == (math.pi, math.pi, 0.0)


def test_weyl_denominator_at_reference(reference_gamma):
    """Delta_B(diag(i, 1, -i)) = -4i."""
    assert weyl_denominator(reference_gamma) == pytest.approx(-4j)


def test_denominator_is_alternating(reference_gamma):
    """Swapping theta1 and theta2 flips the sign."""
    swapped = reference_gamma.conjugate(S12)
    assert swapped.angles == (0.0, math.pi / 2, -math.pi / 2)
    expected = -weyl_denominator(reference_gamma)
    assert weyl_denominator(swapped) == pytest.approx(expected)


def test_normalised_denominator(rng):
    """Delta_B = gamma^rho prod(1 - gamma^-alpha)."""
    for gamma in regular_grid(rng, 5):
        expected = gamma.monomial(RHO) * unnormalized_denominator(gamma)
        assert weyl_denominator(gamma) == pytest.approx(expected, abs=1e-12)


def test_irregular_elements():
    """Characters and denominators are undefined on irregular elements."""
    gamma = EllipticElement((0.5, 0.5, -1.0))
    assert not gamma.regular
    with pytest.raises(IrregularElementError):
        weyl_denominator(gamma)
    with pytest.raises(IrregularElementError):
        ds_character(Weight.of(3, 2, -5), gamma)
    with pytest.raises(IrregularElementError):
        h_denominator(EllipticElement((-0.5, 0.25, 0.25)))


def test_h_denominator(reference_gamma):
    """2i sin((theta2 - theta3) / 2)."""
    assert h_denominator(reference_gamma) == pytest.approx(2j * math.sin(math.pi / 4))


def test_half_dimensions():
    """q(G) = 2 and q(H) = 1."""
    assert (Q_G, Q_H) == (2, 1)


def test_irregular_parameter(reference_gamma):
    """A singular weight has no discrete series character."""
    with pytest.raises(IrregularParameterError):
        ds_character(Weight.of(1, 1, -2), reference_gamma)


def test_character_is_compact_weyl_invariant(rng, reference_mu):
    """Theta(s12 gamma s12) = Theta(gamma)."""
    for gamma in regular_grid(rng, 5):
        value = ds_character(reference_mu, gamma)
        assert ds_character(reference_mu, gamma.conjugate(S12)) == pytest.approx(
            value, abs=1e-10
        )


def test_character_parameter_relabelling(rng, reference_mu):
    """Theta_{s12 lambda} = Theta_lambda."""
    gamma = regular_grid(rng, 1)[0]
    assert ds_character(weyl_act(S12, reference_mu), gamma) == pytest.approx(
        ds_character(reference_mu, gamma), abs=1e-10
    )


def test_ds_character_g(reference_gamma, reference_mu):
    """Theta_{w mu} through ds_character_G."""
    assert ds_character_G(reference_mu, CYCLE, reference_gamma) == pytest.approx(
        ds_character(weyl_act(CYCLE, reference_mu), reference_gamma)
    )


def test_kappa_constraint():
    """kappa(H13) = kappa(H12) kappa(H23) and values are signs."""
    with pytest.raises(ConstraintViolationError):
        KappaCharacter(-1, 1, 1)
    with pytest.raises(ConstraintViolationError):
        KappaCharacter(2, 1, 2)
    kappa = KappaCharacter.reference()
    assert kappa.to_dict() == {"H12": -1, "H23": -1, "H13": 1}
    assert not kappa.is_trivial
    assert KappaCharacter.trivial().is_trivial


def test_printed_kappa_is_resolved(caplog):
    """The printed assignment is replaced by the reference character."""
    assert KappaCharacter.from_printed() == KappaCharacter.reference()
    assert "contradicts" in caplog.text


def test_kappa_on_weyl():
    """c -> H12 and c^2 -> H23 under the paired identification."""
    kappa = KappaCharacter.reference()
    assert kappa.on_weyl(IDENTITY) == 1
    assert kappa.on_weyl(CYCLE) == -1
    assert kappa.on_weyl(CYCLE_SQUARED) == -1
    with pytest.raises(ValueError):
        kappa.on_weyl(S12)


def test_stable_sum_is_trivial_kappa_sum(rng, reference_mu):
    """The stable sum equals the packet sum with kappa = 1."""
    packet = LPacket(reference_mu)
    for gamma in regular_grid(rng, 5):
        assert packet.kappa_sum(KappaCharacter.trivial(), gamma) == pytest.approx(
            stable_character_sum(reference_mu, gamma), abs=1e-10
        )


def test_stable_sum_relabelling(rng, reference_mu):
    """Replacing mu by s12 mu leaves the stable sum unchanged."""
    for gamma in regular_grid(rng, 5):
        assert stable_character_sum(
            weyl_act(S12, reference_mu), gamma
        ) == pytest.approx(stable_character_sum(reference_mu, gamma), abs=1e-10)


def test_packet_members(reference_mu):
    """Three members labelled by coset representatives, basepoint first."""
    packet = LPacket(reference_mu)
    assert len(packet.members) == 3
    assert packet.members[0].parameter == reference_mu
    assert packet.members[0].label == "pi[w123]"
    assert {m.even_element for m in packet.members} == {
        IDENTITY,
        CYCLE,
        CYCLE_SQUARED,
    }
    with pytest.raises(IrregularParameterError):
        LPacket(Weight.zero())


def test_packet_sum_matches_orbital_sum(rng, reference_mu):
    """Regrouping by packet agrees with the kappa-orbital sum."""
    kappa = KappaCharacter.reference()
    grid = regular_grid(rng, 6)
    packets = [LPacket(reference_mu), LPacket(Weight.of(1, 0, -1))]
    report = stable_trace_assembly(packets, kappa, grid)
    assert len(report.rows) == 6
    assert report.max_residual <= 1e-10
    assert report.additivity_residual <= 1e-10
    gamma = grid[0]
    assert packets[0].kappa_sum(kappa, gamma) == pytest.approx(
        kappa_orbital_sum(reference_mu, kappa, gamma), abs=1e-10
    )


def test_packet_report(reference_gamma, reference_mu):
    """Report lists members with kappa values and both sums."""
    report = packet_report(
        LPacket(reference_mu), reference_gamma, KappaCharacter.reference()
    )
    assert [m["kappa"] for m in report["members"]].count(-1) == 2
    assert report["kappa"] == {"H12": -1, "H23": -1, "H13": 1}
    assert report["kappa_reconciliation"] == {
        "printed": {"H12": -1, "H13": -1},
        "used": {"H12": -1, "H23": -1, "H13": 1},
        "mismatches": ["H13"],
    }
    assert np.isfinite(abs(report["stable_sum"]))


def test_kappa_reconciliation_of_trivial_kappa():
    """The trivial character differs from the printed one on H12 and H13."""
    record = kappa_reconciliation(KappaCharacter.trivial())
    assert record["mismatches"] == ["H12", "H13"]
    assert record["printed"] == PRINTED_KAPPA
