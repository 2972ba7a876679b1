# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Polarizations of the Heisenberg radical at a functional."""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import sympy
from sympy import I

from ..algebra import AlgebraElement, BasisChoice, borel_basis, bracket
from ..algebra.basis import expand_in_basis
from .coadjoint import BOREL_NAMES, BFunctional

HEISENBERG_DIMENSION = 3
CENTER_DIMENSION = 1


class PolarizationSign(Enum):
    """Which of l = span(X + iY', Z') or span(X - iY', Z')."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class PolarizationCheck:
    """Outcome of the polarization test."""

    isotropic: bool
    dimension: int
    maximal: bool
    radical_dimension: int
    positive: bool

    @property
    def is_polarization(self) -> bool:
        """Isotropic and of half the dimension of u plus its center."""
        return self.isotropic and self.maximal


def polarization_basis(sign: PolarizationSign) -> list[AlgebraElement]:
    """Exact spanning vectors X +- iY' and Z' of the complex subalgebra l."""
    basis = borel_basis(BasisChoice.CORRECTED)
    epsilon = 1 if sign is PolarizationSign.PLUS else -1
    return [basis["X"] + basis["Y"].scale(epsilon * I), basis["Z"]]


def evaluate_functional(functional: BFunctional, element: AlgebraElement):
    """Complex-linear extension of F to an element of the complexified Borel algebra."""
    basis = borel_basis(BasisChoice.CORRECTED)
    coefficients = expand_in_basis(element, basis)
    if coefficients is None:
        raise ValueError("Element is outside the Borel algebra.")
    values = dict(zip(BOREL_NAMES, functional.to_vector()))
    return sympy.expand(
        sum(sympy.nsimplify(values[name]) * coefficients[name] for name in BOREL_NAMES)
    )


def _radical_dimension(functional: BFunctional) -> int:
    """Dimension of the radical of B_F(a, b) = F([a, b]) on the Heisenberg radical."""
    basis = borel_basis(BasisChoice.CORRECTED)
    names = ("X", "Y", "Z")
    form = sympy.Matrix(
        [
            [
                evaluate_functional(functional, bracket(basis[a], basis[b]))
                for b in names
            ]
            for a in names
        ]
    )
    return HEISENBERG_DIMENSION - form.rank()


def check_polarization(
    sign: PolarizationSign, functional: BFunctional
) -> PolarizationCheck:
    """Exact isotropy and dimension test for l at F.

    Maximality is measured against the generic radical of the Heisenberg
    form, its one-dimensional center, so dim l must equal (3 + 1) / 2.
    """
    vectors = polarization_basis(sign)
    isotropic = all(
        evaluate_functional(functional, bracket(a, b)) == 0
        for a, b in combinations(vectors, 2)
    )
    dimension = sympy.Matrix([list(v.matrix.entries) for v in vectors]).rank()
    # i F([w, conj w]) = 2 epsilon z for w = X + i epsilon Y'
    opposite = (
        PolarizationSign.MINUS
        if sign is PolarizationSign.PLUS
        else PolarizationSign.PLUS
    )
    w, w_bar = vectors[0], polarization_basis(opposite)[0]
    positivity = sympy.expand(I * evaluate_functional(functional, bracket(w, w_bar)))
    return PolarizationCheck(
        isotropic=isotropic,
        dimension=dimension,
        maximal=2 * dimension == HEISENBERG_DIMENSION + CENTER_DIMENSION,
        radical_dimension=_radical_dimension(functional),
        positive=bool(sympy.re(positivity) > 0),
    )


def is_polarization(sign: PolarizationSign | str, functional: BFunctional) -> bool:
    """Whether l = span(X +- iY', Z') is a polarization at F."""
    return check_polarization(PolarizationSign(sign), functional).is_polarization
