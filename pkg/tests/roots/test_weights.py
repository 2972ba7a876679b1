# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Weights, roots and pairings."""

from fractions import Fraction

import pytest

from su21_endoscopy.roots import (
    POSITIVE_ROOTS,
    RHO,
    Coroot,
    Root,
    RootKind,
    Weight,
    chamber_sign,
    is_regular,
    pair,
    root_system,
)
from su21_endoscopy.roots.weights import half_sum_positive, pairings


def test_weight_construction():
    """Coordinates are exact and must sum to zero."""
    weight = Weight.of("1/2", "1/2", -1)
    assert weight.coords == (Fraction(1, 2), Fraction(1, 2), Fraction(-1))
    assert not weight.is_integral
    with pytest.raises(ValueError):
        Weight.of(1, 1, 1)


def test_parse_and_str():
    """Weight.parse reads the CLI format and str writes a tuple."""
    weight = Weight.parse("3, 2, -5")
    assert weight == Weight.of(3, 2, -5)
    assert str(Weight.parse("0,-3/2,3/2")) == "(0, -3/2, 3/2)"


def test_root_system():
    """Six roots; the compact ones are +-alpha_12."""
    roots = root_system()
    assert len(roots) == 6
    compact = {r.name for r in roots if r.kind is RootKind.COMPACT}
    assert compact == {"a12", "a21"}
    weights = {r.weight for r in roots}
    assert all(-w in weights for w in weights)


def test_rho():
    """rho = alpha_32 = (0, -1, 1), the half-sum of the positive roots."""
    assert RHO == Weight.of(0, -1, 1)
    assert half_sum_positive() == RHO
    assert RHO == Root(3, 2).weight
    assert [r.name for r in POSITIVE_ROOTS] == ["a12", "a32", "a31"]


def test_pairing_values():
    """A2 normalisation of the pairing."""
    alpha12 = Root(1, 2).weight
    assert pair(alpha12, Coroot(1, 2)) == 2
    assert pair(alpha12, Coroot(1, 3)) == 1
    assert pair(RHO, Coroot(3, 2)) == 2


def test_pairings_report_all_coroots():
    """Six pairings keyed by coroot name."""
    values = pairings(Weight.of(3, 2, -5))
    assert values == {"H12": 1, "H21": -1, "H23": 7, "H32": -7, "H13": 8, "H31": -8}


def test_regularity_and_chamber_sign():
    """Irregular weights have chamber sign 0."""
    assert not is_regular(Weight.zero())
    assert chamber_sign(Weight.zero()) == 0
    assert is_regular(Weight.of(3, 2, -5))
    assert chamber_sign(Weight.of(3, 2, -5)) == 1
    assert chamber_sign(Weight.of(2, 3, -5)) == -1
