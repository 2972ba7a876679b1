# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Character-side endoscopy for SU(2,1) and S(U(1,1) x U(1))."""

from .characters import (
    Q_G,
    PRINTED_KAPPA,
    Q_H,
    AssemblyReport,
    KappaCharacter,
    LPacket,
    PacketMember,
    ds_character,
    ds_character_G,
    ds_character_H,
    kappa_orbital_sum,
    kappa_reconciliation,
    packet_report,
    stable_character_sum,
    stable_h_character,
    stable_trace_assembly,
)
from .conventions import (
    LOCKED_CONVENTIONS,
    CharacterArgument,
    CosetIdentification,
    DenominatorPhase,
    SignPlacement,
    TransferConventions,
    all_conventions,
)
from .pairing import (
    InversionResult,
    PairingTable,
    PseudoCoefficientCombination,
    kappa_coefficients,
    klein_four_table,
    pairing_inversion_check,
    pseudo_coefficient_combination,
    sigma_from_traces,
    two_element_table,
    zero_coefficients,
)
from .torus import (
    EllipticElement,
    h_denominator,
    regular_grid,
    unnormalized_denominator,
    weyl_denominator,
)
from .transfer import (
    CalibrationManifest,
    EndoscopicElement,
    TransferReport,
    calibrate_conventions,
    chi_fiber_values,
    chi_is_fiber_invariant,
    default_xi,
    embed_H,
    transfer_factor,
    transfer_identity_check,
)

__all__ = (
    "AssemblyReport",
    "CalibrationManifest",
    "CharacterArgument",
    "CosetIdentification",
    "DenominatorPhase",
    "EllipticElement",
    "EndoscopicElement",
    "InversionResult",
    "KappaCharacter",
    "LOCKED_CONVENTIONS",
    "LPacket",
    "PacketMember",
    "PRINTED_KAPPA",
    "PairingTable",
    "PseudoCoefficientCombination",
    "Q_G",
    "Q_H",
    "SignPlacement",
    "TransferConventions",
    "TransferReport",
    "all_conventions",
    "calibrate_conventions",
    "chi_fiber_values",
    "chi_is_fiber_invariant",
    "default_xi",
    "ds_character",
    "ds_character_G",
    "ds_character_H",
    "embed_H",
    "h_denominator",
    "kappa_coefficients",
    "kappa_orbital_sum",
    "kappa_reconciliation",
    "klein_four_table",
    "packet_report",
    "pairing_inversion_check",
    "pseudo_coefficient_combination",
    "regular_grid",
    "sigma_from_traces",
    "stable_character_sum",
    "stable_h_character",
    "stable_trace_assembly",
    "transfer_factor",
    "transfer_identity_check",
    "two_element_table",
    "unnormalized_denominator",
    "weyl_denominator",
    "zero_coefficients",
)
