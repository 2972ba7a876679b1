# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Structure and basis-audit suites."""

from sympy import Rational

from ..algebra import (
    PRINTED_GENERATORS,
    audit_basis,
    bracket,
    cartan_involution,
    corrected_basis,
    in_group,
    is_algebra_member,
    iwasawa_decompose,
    mat_exp,
    random_group_element,
)
from ..algebra.basis import BRACKET_IDENTITIES
from ..algebra.group import membership_defect
from .base import VerificationSuite

TWISTED_GENERATORS = ("T", "Y", "Z")
"""Printed generators that only belong to su(2,1) after multiplication by i."""

MEMBER_GENERATORS = ("X", "H")


def _scale(g) -> float:
    """Rounding in products of g grows with the square of its largest entry."""
    return max(1.0, g.matrix.max_abs()) ** 2


class StructureSuite(VerificationSuite):
    """Exact bracket relations, the Cartan involution and group sampling."""

    name = "structure"

    def _exact_checks(self) -> None:
        basis = corrected_basis()
        for element in basis.values():
            self._check(f"member[{element.label}]", is_algebra_member(element))
        for left, right, coefficient, target in BRACKET_IDENTITIES:
            value = bracket(basis[left], basis[right]).matrix
            if target is None:
                holds = value.is_zero()
            else:
                holds = value.equals(basis[target].matrix.scale(coefficient))
            self._check(f"bracket[{left},{right}]", holds)
        for name, element in PRINTED_GENERATORS.items():
            twice = cartan_involution(cartan_involution(element))
            self._check(f"involution[{name}]", twice.matrix.equals(element.matrix))
        names = list(basis)
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                x, y = basis[a], basis[b]
                lhs = cartan_involution(bracket(x, y)).matrix
                rhs = bracket(cartan_involution(x), cartan_involution(y)).matrix
                self._check(f"involution-bracket[{a},{b}]", lhs.equals(rhs))

    def run(self) -> dict:
        """Run the checks."""
        tol = self.config.structure_tol
        self._exact_checks()

        g = mat_exp(corrected_basis()["X"].scale(Rational(3, 10)), tol)
        self._check("exp-member", g.certified and in_group(g, tol))

        worst = dict(defect=0.0, iwasawa=0.0, unitarity=0.0, involution=0.0)
        for _ in range(self.config.group_samples):
            g = random_group_element(self.rng, tol)
            scale = _scale(g)
            worst["defect"] = max(worst["defect"], membership_defect(g.matrix) / scale)
            factors = iwasawa_decompose(g, tol)
            worst["iwasawa"] = max(worst["iwasawa"], factors.deviation(g) / scale)
            worst["unitarity"] = max(
                worst["unitarity"], factors.k_unitarity_defect() / scale
            )
            twice = cartan_involution(cartan_involution(g))
            worst["involution"] = max(
                worst["involution"], (twice.matrix - g.matrix).max_abs() / scale
            )
        for name, value in worst.items():
            self._check(f"group-{name}", value <= tol, value)
        return dict(samples=self.config.group_samples, relative_residuals=worst)


class AuditSuite(VerificationSuite):
    """Membership verdicts of the printed generators in both arithmetic modes."""

    name = "audit"

    def run(self) -> dict:
        """Run the checks."""
        exact = audit_basis(exact=True)
        approximate = audit_basis(exact=False)
        verdicts = {g["name"]: g for g in exact["generators"]}
        for name in MEMBER_GENERATORS:
            self._check(f"member[{name}]", verdicts[name]["member"])
        for name in TWISTED_GENERATORS:
            self._check(
                f"i-twist[{name}]",
                not verdicts[name]["member"] and verdicts[name]["i_twist_member"],
            )

        def summary(report):
            return (
                [
                    (g["name"], g["member"], g["i_twist_member"])
                    for g in report["generators"]
                ],
                [
                    (i["identity"], i["printed_holds"], i["corrected_holds"])
                    for i in report["identities"]
                ],
            )

        self._check("modes-agree", summary(exact) == summary(approximate))
        identities = {i["identity"]: i for i in exact["identities"]}
        self._check("corrected[X,Y]=Z", identities["[X,Y] = Z"]["corrected_holds"])
        self._check("corrected-relations", exact["passed"])
        return exact
