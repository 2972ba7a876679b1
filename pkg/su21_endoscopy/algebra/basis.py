# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Generators of su(2,1), the Lie bracket and the basis audit."""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import sympy
from sympy import I, Rational

from .matrices import ComplexMatrix3, Mode

logger = logging.getLogger(__name__)

I21 = ComplexMatrix3.exact([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
"""Hermitian form diag(1, 1, -1) defining SU(2,1)."""


class BasisChoice(Enum):
    """Which reading of the Borel generators to use."""

    PRINTED = "printed"
    CORRECTED = "corrected"


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """An element of the ambient sl(3, C) with an optional basis label."""

    matrix: ComplexMatrix3
    label: str | None = None

    @property
    def mode(self) -> Mode:
        """Arithmetic mode of the underlying matrix."""
        return self.matrix.mode

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.matrix + other.matrix)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.matrix - other.matrix)

    def scale(self, factor, label: str | None = None) -> "AlgebraElement":
        """Scalar multiple, optionally relabelled."""
        return AlgebraElement(self.matrix.scale(factor), label)

    def to_float(self) -> "AlgebraElement":
        """Float copy with the same label."""
        return AlgebraElement(self.matrix.to_float(), self.label)


def elementary(k: int, l: int) -> AlgebraElement:
    """Matrix unit E_kl (1-based indices)."""
    rows = [[0] * 3 for _ in range(3)]
    rows[k - 1][l - 1] = 1
    return AlgebraElement(ComplexMatrix3.exact(rows), f"E{k}{l}")


def _exact(label: str, rows, factor=1) -> AlgebraElement:
    return AlgebraElement(ComplexMatrix3.exact(rows).scale(factor), label)


PRINTED_GENERATORS = {
    "T": _exact("T", [[1, 0, 0], [0, -2, 0], [0, 0, 1]], Rational(1, 3)),
    "H": _exact("H", [[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
    "X": _exact("X", [[0, -1, 0], [1, 0, -1], [0, -1, 0]]),
    "Y": _exact("Y", [[0, -1, 0], [-1, 0, 1], [0, -1, 0]]),
    "Z": _exact("Z", [[2, 0, -2], [0, 0, 0], [2, 0, -2]]),
}
"""Generators exactly as printed; X and H belong to su(2,1), T, Y, Z do not."""

S = _exact("S", [[0, 0, 1], [0, 0, 0], [1, 0, 0]])
"""S = E13 + E31, the generator of the split torus."""

BRACKET_IDENTITIES = (
    ("X", "Y", 1, "Z"),
    ("X", "Z", 0, None),
    ("Y", "Z", 0, None),
    ("T", "X", 1, "Y"),
    ("T", "Y", -1, "X"),
    ("T", "Z", 0, None),
)
"""Heisenberg and oscillator relations (a, b, k, c), meaning [a, b] = k * c."""


def bracket(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Commutator ab - ba.

    Raises:
        ModeMismatchError: if one element is exact and the other float.
    """
    return AlgebraElement(a.matrix @ b.matrix - b.matrix @ a.matrix)


def is_algebra_member(x: AlgebraElement, tol: float | None = None) -> bool:
    """Whether x is in su(2,1): trace zero and I21 x skew-Hermitian."""
    form = I21 if x.matrix.is_exact else I21.to_float()
    twisted = form @ x.matrix
    skew = twisted + twisted.dagger()
    if x.matrix.is_exact:
        return skew.is_zero() and sympy.expand(x.matrix.trace()) == 0
    limit = x.matrix.tol if tol is None else tol
    return skew.is_zero(limit) and abs(x.matrix.trace()) <= limit


@lru_cache(maxsize=None)
def corrected_basis() -> dict[str, AlgebraElement]:
    """Printed generators with i-twists applied exactly where membership fails.

    The result is cached and shared; callers must not mutate it.
    """
    basis = {}
    for name, element in PRINTED_GENERATORS.items():
        if is_algebra_member(element):
            basis[name] = element
        else:
            basis[name] = element.scale(I, f"{name}'")
    return basis


def borel_basis(
    choice: BasisChoice = BasisChoice.CORRECTED,
) -> dict[str, AlgebraElement]:
    """The four generators T, X, Y, Z of the Borel algebra in the chosen reading."""
    source = PRINTED_GENERATORS if choice is BasisChoice.PRINTED else corrected_basis()
    return {name: source[name] for name in ("T", "X", "Y", "Z")}


def expand_in_basis(
    x: AlgebraElement, basis: dict[str, AlgebraElement]
) -> dict[str, sympy.Expr] | None:
    """Exact coefficients of x in the basis, None when x is outside its span."""
    names = list(basis)
    columns = [list(basis[name].matrix.entries) for name in names]
    system = sympy.Matrix(columns).T
    target = sympy.Matrix(list(x.matrix.entries))
    try:
        solution, params = system.gauss_jordan_solve(target)
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    return {
        name: sympy.nsimplify(sympy.expand(solution[i]))
        for i, name in enumerate(names)
    }


def _identity_holds(basis: dict[str, AlgebraElement], identity) -> bool:
    left, right, coefficient, target = identity
    value = bracket(basis[left], basis[right]).matrix
    if target is None:
        return value.is_zero()
    return value.equals(basis[target].matrix.scale(coefficient))


def _to_float_basis(basis: dict[str, AlgebraElement]) -> dict[str, AlgebraElement]:
    return {name: element.to_float() for name, element in basis.items()}


def audit_basis(exact: bool = True) -> dict:
    """Audit the printed generators against membership and the bracket relations.

    Args:
        exact: run the bracket relations in exact arithmetic. Float mode
            reproduces the same verdicts up to ``ComplexMatrix3.tol``.

    Returns:
        Report dictionary with per-generator membership, the corrected basis,
        its bracket table and the verdict of each relation in both readings.
    """
    printed = PRINTED_GENERATORS
    corrected = corrected_basis()
    printed_eval = printed if exact else _to_float_basis(printed)
    corrected_eval = corrected if exact else _to_float_basis(corrected)

    generators = []
    for name, element in printed.items():
        rows = []
        for other in corrected:
            coefficients = expand_in_basis(
                bracket(corrected[name], corrected[other]), corrected
            )
            rows.append(
                dict(
                    other=corrected[other].label,
                    coefficients=(
                        None
                        if coefficients is None
                        else {
                            corrected[key].label: str(value)
                            for key, value in coefficients.items()
                            if value != 0
                        }
                    ),
                )
            )
        generators.append(
            dict(
                name=name,
                member=is_algebra_member(element),
                i_twist_member=is_algebra_member(element.scale(I)),
                corrected_label=corrected[name].label,
                bracket_rows=rows,
            )
        )

    identities = []
    errata = []
    for identity in BRACKET_IDENTITIES:
        left, right, coefficient, target = identity
        printed_holds = _identity_holds(printed_eval, identity)
        corrected_holds = _identity_holds(corrected_eval, identity)
        text = f"[{left},{right}] = " + (
            "0" if target is None else f"{'-' if coefficient < 0 else ''}{target}"
        )
        identities.append(
            dict(
                identity=text,
                printed_holds=printed_holds,
                corrected_holds=corrected_holds,
            )
        )
        if not printed_holds:
            logger.warning("Printed generators violate %s.", text)
            errata.append(f"{text} fails on the printed generators")

    return dict(
        mode=Mode.EXACT.value if exact else Mode.FLOAT.value,
        generators=generators,
        identities=identities,
        corrected_basis={
            element.label: element.matrix.rows() for element in corrected.values()
        },
        errata=errata,
        passed=all(item["corrected_holds"] for item in identities),
    )
