# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Orbital integrals: the elliptic split case and the theta case."""

from .cubature import (
    ZERO_RESULT,
    CubatureRule,
    QuadratureResult,
    nested_cubature,
    panel_rule,
    tanh_rule,
)
from .elliptic import (
    DiagonalGamma,
    EllipticComparison,
    GammaCase,
    JacobianReading,
    SmoothnessReport,
    compare_elliptic,
    conjugated_matrix,
    elliptic_orbital_closed_form,
    elliptic_orbital_quadrature,
    geodesic_grid,
    printed_corner_entry,
    random_elliptic_bump,
    random_gamma,
    second_differences,
    smooth_transfer_fH,
)
from .theta import (
    ParityFit,
    SingularFit,
    dyadic_sequence,
    parity_fit,
    parity_functions,
    singular_fit,
    theta_jacobian,
    theta_matrix,
    theta_orbital_F,
    theta_support,
    theta_transfer_fH,
    unipotent_integral,
)

__all__ = (
    "CubatureRule",
    "DiagonalGamma",
    "EllipticComparison",
    "GammaCase",
    "JacobianReading",
    "ParityFit",
    "QuadratureResult",
    "SingularFit",
    "SmoothnessReport",
    "ZERO_RESULT",
    "compare_elliptic",
    "conjugated_matrix",
    "dyadic_sequence",
    "elliptic_orbital_closed_form",
    "elliptic_orbital_quadrature",
    "geodesic_grid",
    "nested_cubature",
    "panel_rule",
    "parity_fit",
    "parity_functions",
    "printed_corner_entry",
    "random_elliptic_bump",
    "random_gamma",
    "second_differences",
    "singular_fit",
    "smooth_transfer_fH",
    "tanh_rule",
    "theta_jacobian",
    "theta_matrix",
    "theta_orbital_F",
    "theta_support",
    "theta_transfer_fH",
    "unipotent_integral",
)
