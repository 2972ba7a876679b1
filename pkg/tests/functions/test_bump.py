# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Bump test functions."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from su21_endoscopy.algebra import ComplexMatrix3
from su21_endoscopy.functions import (
    BumpFactor,
    BumpFunction,
    Coordinate,
    bump_profile,
    bump_profile_derivative,
)


def _matrix_with(entry, value):
    array = np.eye(3, dtype=complex)
    array[entry] = value
    return array


def test_profile():
    """Peak exp(-1) at zero, zero on and outside the unit interval."""
    assert bump_profile(0.0) == pytest.approx(math.exp(-1))
    assert bump_profile(1.0) == 0.0
    assert bump_profile(-1.5) == 0.0
    assert bump_profile(0.4) == pytest.approx(bump_profile(-0.4))


def test_profile_derivative():
    """Analytic derivative agrees with a central difference."""
    h = 1e-6
    for s in (-0.7, -0.2, 0.3, 0.8):
        numeric = (bump_profile(s + h) - bump_profile(s - h)) / (2 * h)
        assert bump_profile_derivative(s) == pytest.approx(numeric, rel=1e-5)
    assert bump_profile_derivative(0.0) == 0.0


@settings(max_examples=200, deadline=None)
@given(s=st.floats(0.5, 0.999), sign=st.sampled_from([-1.0, 1.0]))
def test_profile_derivative_near_support_edge(s, sign):
    """Central differences track the derivative as |s| approaches 1."""
    s = sign * s
    h = 1e-4 * (1 - abs(s)) ** 2
    numeric = (bump_profile(s + h) - bump_profile(s - h)) / (2 * h)
    expected = float(bump_profile_derivative(s))
    assert numeric == pytest.approx(expected, rel=1e-6, abs=1e-300)


def test_profile_is_flat_at_support_edge():
    """Profile, slope and second difference all vanish at |s| = 1."""
    distances = [10.0**-k for k in range(1, 5)]
    slopes = [abs(float(bump_profile_derivative(1 - d))) for d in distances]
    assert slopes == sorted(slopes, reverse=True)
    assert slopes[-1] == 0.0
    for h in (1e-2, 1e-3):
        for edge in (-1.0, 1.0):
            left = float(bump_profile(edge - h))
            right = float(bump_profile(edge + h))
            assert abs(left - right) / h < 1e-15
            assert abs(left + right - 2 * bump_profile(edge)) / h**2 < 1e-15


def test_peak_and_support(unit_bump):
    """f peaks at the center and vanishes on and beyond the boundary."""
    assert unit_bump.evaluate(ComplexMatrix3.identity()) == pytest.approx(
        math.exp(-1)
    )
    assert unit_bump.evaluate(_matrix_with((0, 1), 1.0)) == 0.0
    assert unit_bump.evaluate(_matrix_with((0, 1), -3.0)) == 0.0
    assert unit_bump.evaluate(_matrix_with((0, 1), 0.5)) > 0


def test_amplitude_and_scaling():
    """The amplitude multiplies every value."""
    f = BumpFunction(
        amplitude=2.5, factors=[BumpFactor(coord="im12", center=0.5, radius=2.0)]
    )
    peak = f.evaluate(_matrix_with((1, 2), 0.5j))
    assert peak == pytest.approx(2.5 * math.exp(-1))
    assert f.scaled(2).evaluate(_matrix_with((1, 2), 0.5j)) == pytest.approx(2 * peak)


def test_batch_evaluation(unit_bump):
    """Leading batch dimensions broadcast."""
    batch = np.stack([_matrix_with((0, 1), v) for v in (0.0, 0.5, 2.0)])
    values = unit_bump.evaluate(batch)
    assert values.shape == (3,)
    assert values[2] == 0.0


def test_support_box():
    """Intervals are reported in declaration order and intersected per coordinate."""
    f = BumpFunction(
        factors=[
            BumpFactor(coord="re00", center=1.0, radius=0.5),
            BumpFactor(coord="t", center=0.0, radius=2.0),
            BumpFactor(coord="re00", center=1.2, radius=0.5),
        ]
    )
    assert f.support_box() == [(0.5, 1.5), (-2.0, 2.0), (pytest.approx(0.7), 1.7)]
    assert f.support_interval(Coordinate.RE00) == (pytest.approx(0.7), 1.5)
    assert f.support_interval(Coordinate.IM22) is None
    assert f.coordinates == {Coordinate.RE00, Coordinate.T}


def test_scalar_parameters():
    """Parameter coordinates are read from params."""
    f = BumpFunction(factors=[BumpFactor(coord="lambda", center=0.0, radius=1.0)])
    assert f.evaluate(ComplexMatrix3.identity(), {"lambda": 0.0}) == pytest.approx(
        math.exp(-1)
    )
    with pytest.raises(KeyError):
        f.evaluate(ComplexMatrix3.identity())


@pytest.mark.parametrize(
    "payload",
    [
        {"factors": []},
        {"factors": [{"coord": "re01", "center": 0, "radius": 0}]},
        {"factors": [{"coord": "re33", "center": 0, "radius": 1}]},
        {"factors": [{"coord": "re01", "center": 0, "radius": 1}], "extra": 1},
    ],
)
def test_validation(payload):
    """Empty factor lists, non-positive radii and unknown keys are rejected."""
    with pytest.raises(ValidationError):
        BumpFunction.model_validate(payload)


def test_json_round_trip(unit_bump):
    """Bump functions serialise through pydantic."""
    assert BumpFunction.model_validate_json(unit_bump.model_dump_json()) == unit_bump
