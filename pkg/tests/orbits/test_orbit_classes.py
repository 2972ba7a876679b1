# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Orbit strata and the coadjoint action."""

import numpy as np
import pytest

from su21_endoscopy.algebra import borel_element, random_group_element
from su21_endoscopy.errors import NotBorelError
from su21_endoscopy.orbits import (
    BFunctional,
    OrbitKind,
    classify_orbit,
    coadjoint_act,
)


@pytest.mark.parametrize(
    "values,kind",
    [
        ((1, 2, 3, 0.5), OrbitKind.OMEGA_PLUS),
        ((1, 2, 3, -0.5), OrbitKind.OMEGA_MINUS),
        ((5, -2, 0, 0), OrbitKind.HALF_PLANE_X_NEG),
        ((5, 2, 0, 0), OrbitKind.HALF_PLANE_X_POS),
        ((0, 0, 3, 0), OrbitKind.HALF_PLANE_Y_POS),
        ((0, 0, -3, 0), OrbitKind.HALF_PLANE_Y_NEG),
        ((7, 0, 0, 0), OrbitKind.ORIGIN),
    ],
)
def test_classify_examples(values, kind):
    """Representative functionals land in the expected stratum."""
    assert classify_orbit(BFunctional(*values)).kind is kind


def test_cylinders_record_alpha():
    """Cylinders carry alpha = xy, including the negative family."""
    positive = classify_orbit(BFunctional(0, 1, 1, 0))
    assert positive.kind is OrbitKind.CYLINDER
    assert positive.alpha == 1
    negative = classify_orbit(BFunctional(0, 2, -1.5, 0))
    assert negative.kind is OrbitKind.CYLINDER
    assert negative.alpha == -3
    assert negative.name == "cylinder"


def test_negative_tolerance():
    """tol < 0 is rejected."""
    with pytest.raises(ValueError):
        classify_orbit(BFunctional(0, 0, 0, 0), -1.0)


def test_identity_acts_trivially():
    """Ad*_e F = F."""
    functional = BFunctional(0.3, -1.2, 0.7, 2.0)
    image = coadjoint_act(borel_element(0, 0, 0, 0), functional)
    assert np.allclose(image.to_vector(), functional.to_vector(), atol=1e-12)


def test_z_coordinate_is_invariant(rng):
    """The center Z' is fixed by Ad, so z never moves."""
    for _ in range(20):
        functional = BFunctional.from_vector(rng.normal(size=4))
        b = borel_element(*rng.uniform(-1, 1, size=4))
        image = coadjoint_act(b, functional)
        assert image.z == pytest.approx(functional.z, abs=1e-9)


def test_omega_strata_are_invariant(rng):
    """Functionals with z != 0 stay in their open orbit."""
    for sign in (1.0, -1.0):
        functional = BFunctional(0.2, 1.0, -0.4, sign)
        for _ in range(10):
            b = borel_element(*rng.uniform(-1, 1, size=4))
            before = classify_orbit(functional)
            assert classify_orbit(coadjoint_act(b, functional)).kind is before.kind


def test_unipotent_part_preserves_alpha(rng):
    """On z = 0 the unipotent radical fixes x and y, hence alpha."""
    functional = BFunctional(0.5, 1.5, -2.0, 0.0)
    for _ in range(10):
        b = borel_element(0.0, *rng.uniform(-1, 1, size=3))
        image = coadjoint_act(b, functional)
        assert classify_orbit(image).alpha == pytest.approx(-3.0, abs=1e-9)


def test_non_borel_element_is_rejected(rng):
    """A generic group element is not in B."""
    with pytest.raises(NotBorelError):
        coadjoint_act(random_group_element(rng, 1e-10), BFunctional(0, 1, 1, 0))
