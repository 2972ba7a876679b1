# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Unit tests for exact and float 3x3 matrices."""

import numpy as np
import pytest
import sympy

from su21_endoscopy.algebra import ComplexMatrix3, Mode
from su21_endoscopy.errors import ModeMismatchError, SingularMatrixError


def test_exact_arithmetic_never_rounds():
    """Thirds stay thirds after products and sums."""
    third = ComplexMatrix3.exact([[sympy.Rational(1, 3), 0, 0], [0, 3, 0], [0, 0, 1]])
    product = third @ third.inverse()
    assert product.is_exact
    assert product.equals(ComplexMatrix3.identity(Mode.EXACT))
    assert third.det() == 1


def test_gaussian_rational_entries():
    """Entries like 1/2 + i survive conjugate transposition exactly."""
    entry = sympy.Rational(1, 2) + sympy.I
    m = ComplexMatrix3.exact([[0, entry, 0], [0, 0, 0], [0, 0, 0]])
    assert m.dagger()[1, 0] == sympy.Rational(1, 2) - sympy.I


def test_mode_mismatch():
    """Mixing exact and float operands raises."""
    exact = ComplexMatrix3.identity(Mode.EXACT)
    approximate = ComplexMatrix3.identity()
    with pytest.raises(ModeMismatchError):
        exact + approximate
    with pytest.raises(ModeMismatchError):
        exact @ approximate


def test_float_tolerance():
    """Float predicates use the attached tolerance."""
    tiny = ComplexMatrix3.from_array(np.full((3, 3), 1e-14))
    assert tiny.is_zero()
    assert not tiny.is_zero(1e-16)


def test_singular_inverse():
    """Singular matrices are rejected in both modes."""
    with pytest.raises(SingularMatrixError):
        ComplexMatrix3.zero(Mode.EXACT).inverse()
    with pytest.raises(SingularMatrixError):
        ComplexMatrix3.zero().inverse()


def test_shape_is_checked():
    """Only 3x3 input is accepted."""
    with pytest.raises(ValueError):
        ComplexMatrix3.from_array(np.eye(2))
    with pytest.raises(ValueError):
        ComplexMatrix3.exact([[1, 0], [0, 1]])
