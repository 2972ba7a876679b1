# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Bracket relations and the basis audit."""

import pytest
from sympy import I

from su21_endoscopy.algebra import (
    PRINTED_GENERATORS,
    ComplexMatrix3,
    Mode,
    audit_basis,
    bracket,
    cartan_involution,
    corrected_basis,
    is_algebra_member,
)
from su21_endoscopy.errors import ModeMismatchError


def test_heisenberg_relation_on_printed_matrices():
    """[X, Y] = Z holds exactly for the printed generators."""
    g = PRINTED_GENERATORS
    assert bracket(g["X"], g["Y"]).matrix.equals(g["Z"].matrix)
    assert bracket(g["X"], g["Z"]).matrix.is_zero()
    assert bracket(g["Y"], g["Z"]).matrix.is_zero()


def test_oscillator_relations_on_printed_matrices():
    """[T, X] = Y and [T, Z] = 0 hold exactly; [T, Y] comes out as +X."""
    g = PRINTED_GENERATORS
    assert bracket(g["T"], g["X"]).matrix.equals(g["Y"].matrix)
    assert bracket(g["T"], g["Z"]).matrix.is_zero()
    assert bracket(g["T"], g["Y"]).matrix.equals(g["X"].matrix)


def test_antisymmetry():
    """[H, H] = 0."""
    h = PRINTED_GENERATORS["H"]
    assert bracket(h, h).matrix.is_zero()


def test_bracket_mode_mismatch():
    """An exact and a float element cannot be bracketed."""
    x = PRINTED_GENERATORS["X"]
    with pytest.raises(ModeMismatchError):
        bracket(x, x.to_float())


def test_corrected_basis_relations():
    """The i-twisted basis satisfies the Heisenberg and oscillator relations."""
    b = corrected_basis()
    assert bracket(b["X"], b["Y"]).matrix.equals(b["Z"].matrix)
    assert bracket(b["X"], b["Z"]).matrix.is_zero()
    assert bracket(b["Y"], b["Z"]).matrix.is_zero()
    assert bracket(b["T"], b["X"]).matrix.equals(b["Y"].matrix)
    assert bracket(b["T"], b["Y"]).matrix.equals(b["X"].matrix.scale(-1))
    assert all(is_algebra_member(element) for element in b.values())


def test_corrected_labels():
    """Twisted generators are primed."""
    labels = {name: element.label for name, element in corrected_basis().items()}
    assert labels == {"T": "T'", "H": "H", "X": "X", "Y": "Y'", "Z": "Z'"}


def test_membership_of_printed_generators():
    """X and H are members; T, Y and Z need the i-twist."""
    g = PRINTED_GENERATORS
    assert is_algebra_member(g["X"])
    assert is_algebra_member(g["H"])
    for name in ("T", "Y", "Z"):
        assert not is_algebra_member(g[name])
        assert is_algebra_member(g[name].scale(I))


def test_cartan_involution_on_printed_x():
    """theta(X) = -X^t for the real matrix X, and theta is an involution."""
    x = PRINTED_GENERATORS["X"]
    assert cartan_involution(x).matrix.equals(-x.matrix.transpose())
    for element in PRINTED_GENERATORS.values():
        twice = cartan_involution(cartan_involution(element))
        assert twice.matrix.equals(element.matrix)


def test_cartan_involution_of_zero():
    """theta(0) = 0."""
    from su21_endoscopy.algebra.basis import AlgebraElement

    zero = AlgebraElement(ComplexMatrix3.zero(Mode.EXACT))
    assert cartan_involution(zero).matrix.is_zero()


def test_audit_basis():
    """Per-generator verdicts, the printed erratum and the corrected relations."""
    report = audit_basis(exact=True)
    verdicts = {g["name"]: g for g in report["generators"]}
    assert verdicts["X"]["member"] and verdicts["H"]["member"]
    for name in ("T", "Y", "Z"):
        assert not verdicts[name]["member"]
        assert verdicts[name]["i_twist_member"]

    identities = {i["identity"]: i for i in report["identities"]}
    assert identities["[X,Y] = Z"]["printed_holds"]
    assert identities["[X,Y] = Z"]["corrected_holds"]
    assert not identities["[T,Y] = -X"]["printed_holds"]
    assert identities["[T,Y] = -X"]["corrected_holds"]
    assert report["errata"] == ["[T,Y] = -X fails on the printed generators"]
    assert report["passed"]
    assert set(report["corrected_basis"]) == {"T'", "H", "X", "Y'", "Z'"}


def test_audit_modes_agree():
    """Float mode reproduces the exact verdicts."""
    exact = audit_basis(exact=True)
    approximate = audit_basis(exact=False)
    assert approximate["mode"] == "float"
    assert exact["generators"] == approximate["generators"]
    assert exact["identities"] == approximate["identities"]
