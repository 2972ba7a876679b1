# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Group membership, the exponential and Borel elements."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Rational

from su21_endoscopy.algebra import (
    BasisChoice,
    ComplexMatrix3,
    GroupElement,
    borel_element,
    cartan_involution,
    corrected_basis,
    in_group,
    is_borel,
    mat_exp,
    random_algebra_member,
    random_group_element,
)
from su21_endoscopy.algebra.group import membership_defect
from su21_endoscopy.config import ENDOSCOPY_GROUP_SAMPLES


def test_identity_is_member():
    """The identity passes at any positive tolerance."""
    assert in_group(ComplexMatrix3.identity(), 1e-15)
    assert GroupElement.identity().certified


def test_diagonal_split_element_is_not_member():
    """diag(2, 1, 1/2) violates the Hermitian form."""
    assert not in_group(ComplexMatrix3.from_array(np.diag([2.0, 1.0, 0.5])), 1e-10)


def test_tolerance_must_be_positive():
    """tol <= 0 is rejected."""
    with pytest.raises(ValueError):
        in_group(ComplexMatrix3.identity(), 0.0)


def test_exp_of_member():
    """exp(0.3 X) is certified at 1e-12."""
    g = mat_exp(corrected_basis()["X"].scale(Rational(3, 10)), 1e-12)
    assert g.certified
    assert in_group(g, 1e-12)


def test_exp_of_zero():
    """exp(0) = I."""
    g = mat_exp(np.zeros((3, 3)))
    assert np.array_equal(g.to_array(), np.eye(3))


def test_exp_of_diagonal():
    """exp(diag(ia, ib, ic)) = diag(e^{ia}, e^{ib}, e^{ic})."""
    angles = np.array([0.7, -1.9, 1.2])
    g = mat_exp(np.diag(1j * angles))
    assert np.allclose(g.to_array(), np.diag(np.exp(1j * angles)), atol=1e-13)
    assert g.certified


def test_exp_of_nilpotent_is_terminating_series():
    """Strictly upper triangular input gives I + N + N^2/2."""
    n = np.array([[0, 1.5, -2.0], [0, 0, 0.25], [0, 0, 0]], dtype=complex)
    g = mat_exp(n)
    assert np.array_equal(g.to_array(), np.eye(3) + n + n @ n / 2)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), s=st.floats(-1.0, 1.0))
def test_exp_preserves_membership(seed, s):
    """exp(s x) stays in the group for random algebra members x."""
    x = random_algebra_member(np.random.default_rng(seed))
    g = mat_exp(s * x, 1e-10)
    scale = max(1.0, g.matrix.max_abs()) ** 2
    assert membership_defect(g.matrix) / scale <= 1e-10


def test_exp_membership_over_default_sample_count(rng):
    """in_group(exp(s x)) at 1e-10 for ENDOSCOPY_GROUP_SAMPLES seeded draws."""
    for _ in range(ENDOSCOPY_GROUP_SAMPLES):
        x = random_algebra_member(rng)
        s = rng.uniform(-1.0, 1.0)
        assert in_group(mat_exp(s * x, 1e-10), 1e-10)


def test_group_involution(rng):
    """theta(theta(g)) = g and theta(I) = I."""
    g = random_group_element(rng, 1e-10)
    twice = cartan_involution(cartan_involution(g))
    scale = max(1.0, g.matrix.max_abs()) ** 2
    assert (twice.matrix - g.matrix).max_abs() / scale <= 1e-12
    identity = cartan_involution(GroupElement.identity())
    assert identity.matrix.equals(ComplexMatrix3.identity())


def test_borel_elements():
    """Corrected-basis Borel elements are certified members of MN."""
    b = borel_element(0.4, 0.3, -0.2, 0.5)
    assert b.certified
    assert is_borel(b, 1e-9)


def test_printed_borel_elements_are_not_members():
    """The printed reading produces real matrices outside SU(2,1)."""
    b = borel_element(0.0, 0.3, -0.2, 0.5, choice=BasisChoice.PRINTED)
    assert not b.certified
    assert not in_group(b, 1e-9)


def test_random_element_is_not_borel(rng):
    """A generic group element does not fix the isotropic line."""
    g = random_group_element(rng, 1e-10)
    assert g.certified
    assert not is_borel(g, 1e-9)
