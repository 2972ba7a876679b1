# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""The theta-case integral and its expansion near lambda = 0."""

import math

import numpy as np
import pytest

from su21_endoscopy.errors import (
    IllConditionedFitError,
    LambdaOutOfRangeError,
    SupportUnboundedError,
)
from su21_endoscopy.functions import BumpFunction
from su21_endoscopy.quadrature import (
    dyadic_sequence,
    parity_functions,
    singular_fit,
    theta_jacobian,
    theta_matrix,
    theta_orbital_F,
    theta_support,
    theta_transfer_fH,
    unipotent_integral,
)

PROFILE_MASS = 0.4439938161680794
"""Integral of exp(-1 / (1 - s^2)) over (-1, 1)."""

ENTRY_BUMP = BumpFunction.model_validate(
    {
        "factors": [
            {"coord": "re01", "center": 0.0, "radius": 1.0},
            {"coord": "re10", "center": 0.0, "radius": 1.0},
        ]
    }
)


def _t_bump(center, radius):
    return BumpFunction.model_validate(
        {"factors": [{"coord": "t", "center": center, "radius": radius}]}
    )


def test_theta_matrix():
    """Determinant one for every lambda and t."""
    matrices = theta_matrix(0.6, np.array([0.5, 1.0, 3.0]))
    assert np.allclose(np.linalg.det(matrices), 1.0)
    assert matrices[1, 0, 1] == pytest.approx(0.6)


def test_lambda_range():
    """lambda = 0 and |lambda| > 1 are rejected."""
    with pytest.raises(LambdaOutOfRangeError):
        theta_orbital_F(ENTRY_BUMP, 0.0, 1e-10)
    with pytest.raises(LambdaOutOfRangeError):
        theta_orbital_F(ENTRY_BUMP, 1.5, 1e-10)


def test_lambda_one_is_finite():
    """F(1) is finite."""
    result = theta_orbital_F(ENTRY_BUMP, 1.0, 1e-10)
    assert math.isfinite(result.value)
    assert result.error_estimate <= 1e-8


def test_unbounded_support():
    """A factor on a diagonal entry alone does not bound t."""
    f = BumpFunction.model_validate(
        {"factors": [{"coord": "re22", "center": 1.0, "radius": 1.0}]}
    )
    with pytest.raises(SupportUnboundedError):
        theta_orbital_F(f, 0.5, 1e-10)


def test_entry_support_window():
    """|t lambda| <= 1 and |lambda / t| <= 1 give t in [lambda, 1 / lambda]."""
    lo, hi = theta_support(ENTRY_BUMP, 0.25)
    assert (lo, hi) == (pytest.approx(0.25), pytest.approx(4.0))


@pytest.mark.parametrize(
    "center,radius,sign", [(1.5, 0.4, 1.0), (0.6, 0.3, -1.0)]
)
def test_t_only_bump(center, radius, sign):
    """F is +-radius times the profile mass when the support lies on one side of 1."""
    f = _t_bump(center, radius)
    for lam in (1.0, 0.5, -0.125):
        value = theta_orbital_F(f, lam, 1e-12).value
        assert value == pytest.approx(sign * radius * PROFILE_MASS, rel=1e-8)


def test_parity_of_t_only_bump():
    """F does not depend on lambda, so H vanishes and G = 2 |lambda| F."""
    f = _t_bump(1.5, 0.4)
    g, h = parity_functions(f, -0.5, 1e-12)
    assert g == pytest.approx(2 * 0.5 * 0.4 * PROFILE_MASS, rel=1e-8)
    assert h == pytest.approx(0.0, abs=1e-12)
    assert theta_transfer_fH(f, math.pi / 6, 1e-12) == pytest.approx(0.0, abs=1e-11)


def test_transfer_uses_symmetrised_h():
    """f^H(k(theta)) = -2i |sin theta| (F(|sin theta|) - F(-|sin theta|))."""
    theta = -math.pi / 6
    a = abs(math.sin(theta))
    plus = theta_orbital_F(ENTRY_BUMP, a, 1e-10).value
    minus = theta_orbital_F(ENTRY_BUMP, -a, 1e-10).value
    expected = -2j * a * (plus - minus)
    value = theta_transfer_fH(ENTRY_BUMP, theta, 1e-10)
    assert value == pytest.approx(expected, abs=1e-8)
    assert value == pytest.approx(theta_transfer_fH(ENTRY_BUMP, -theta, 1e-10))


def test_unipotent_integral():
    """The one-sided A-terms split the profile mass evenly."""
    plus = unipotent_integral(ENTRY_BUMP, 1.0, 1e-12)
    minus = unipotent_integral(ENTRY_BUMP, -1.0, 1e-12)
    assert plus.value == pytest.approx(minus.value, rel=1e-10)
    assert plus.value + minus.value == pytest.approx(
        math.exp(-1) * PROFILE_MASS, rel=1e-8
    )


def test_unipotent_integral_needs_matrix_coordinates():
    """Scalar parameters have no unipotent limit."""
    with pytest.raises(ValueError):
        unipotent_integral(_t_bump(1.5, 0.4), 1.0, 1e-10)


def test_dyadic_sequence():
    """lambda_k = sign 2^-k."""
    assert dyadic_sequence(1, 3) == [0.5, 0.25, 0.125]
    assert dyadic_sequence(2, 3, -1.0) == [-0.25, -0.125]


@pytest.mark.parametrize(
    "lambdas",
    [
        dyadic_sequence(1, 7),
        list(reversed(dyadic_sequence(1, 8))),
        dyadic_sequence(1, 7) + [-(2.0**-8)],
    ],
)
def test_singular_fit_input_checks(lambdas):
    """At least eight strictly decreasing values of one sign."""
    with pytest.raises(ValueError):
        singular_fit(ENTRY_BUMP, lambdas, 1e-10)


def test_singular_fit_condition_guard():
    """The fit refuses a design matrix above the condition limit."""
    with pytest.raises(IllConditionedFitError):
        singular_fit(ENTRY_BUMP, dyadic_sequence(1, 8), 1e-10, condition_limit=1.0)


def test_singular_fit_reports_expansion():
    """Coefficients and diagnostics are finite and the A-term is attached."""
    fit = singular_fit(ENTRY_BUMP, dyadic_sequence(2, 9), 1e-11)
    assert len(fit.values) == 8
    assert all(math.isfinite(v) for v in (fit.c_inv, fit.c_log, fit.c_0))
    assert fit.a_term == pytest.approx(
        unipotent_integral(ENTRY_BUMP, 1.0, 1e-11).value
    )
    assert fit.condition_number > 1
    assert isinstance(fit.growth, bool)


def test_theta_jacobian():
    """-2i sin(theta)."""
    assert theta_jacobian(math.pi / 2) == pytest.approx(-2j)
    assert theta_jacobian(0.0) == 0
