# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Pairing tables, the inversion formula and pseudo-coefficient combinations."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ..errors import IndexMismatchError, NonOrthogonalTableError
from ..roots import Weight, WeylElement, even_elements
from .characters import KappaCharacter
from .conventions import CosetIdentification


@dataclass(frozen=True)
class PairingTable:
    """<s, pi> for s in S_phi (rows) and pi in the packet (columns).

    The first row belongs to the basepoint s = 1 and is all +1.
    """

    endoscopic: tuple[str, ...]
    packet: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        """Entries are signs laid out as rows x columns."""
        if len(self.entries) != len(self.endoscopic) or not self.entries:
            raise ValueError("One row of entries per element of S_phi is required.")
        for row in self.entries:
            if len(row) != len(self.packet):
                raise ValueError("Every row needs one entry per packet member.")
            if any(value not in (1, -1) for value in row):
                raise ValueError("Pairing values are +1 or -1.")
        if any(value != 1 for value in self.entries[0]):
            raise ValueError("The basepoint row must be all +1.")

    @property
    def size(self) -> int:
        """#S_phi."""
        return len(self.endoscopic)

    def gram(self) -> list[list[Fraction]]:
        """(1 / #S_phi) T T^t."""
        n = Fraction(1, self.size)
        return [
            [n * sum(a * b for a, b in zip(r, s)) for s in self.entries]
            for r in self.entries
        ]

    def check_orthogonal(self) -> None:
        """Raise ``NonOrthogonalTableError`` unless the normalised rows are orthonormal.

        The table must also be square so that the columns are orthonormal.
        """
        if self.size != len(self.packet):
            raise NonOrthogonalTableError(
                f"A {self.size} x {len(self.packet)} table cannot be inverted."
            )
        for i, row in enumerate(self.gram()):
            for j, value in enumerate(row):
                if value != (1 if i == j else 0):
                    raise NonOrthogonalTableError(
                        f"Rows {self.endoscopic[i]} and {self.endoscopic[j]} "
                        f"have normalised product {value}."
                    )


def two_element_table() -> PairingTable:
    """S_phi = {1, s}, <s, pi+-> = +-1."""
    return PairingTable(("1", "s"), ("pi+", "pi-"), ((1, 1), (1, -1)))


def klein_four_table() -> PairingTable:
    """Characters of Z/2 x Z/2."""
    return PairingTable(
        ("1", "s1", "s2", "s1s2"),
        ("pi1", "pi2", "pi3", "pi4"),
        ((1, 1, 1, 1), (1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, 1)),
    )


def _normalization(table: PairingTable, normalization) -> list[Fraction]:
    if normalization is None:
        return [Fraction(1)] * table.size
    values = [Fraction(normalization[s]) for s in table.endoscopic]
    if any(value == 0 for value in values):
        raise ValueError("Normalisation constants c(s) must be non-zero.")
    return values


def sigma_from_traces(
    table: PairingTable,
    traces: Sequence,
    normalization: Mapping[str, Fraction] | None = None,
) -> list[Fraction]:
    """Sigma_s = c(s) sum_pi <s, pi> trace pi(f), exactly."""
    if len(traces) != len(table.packet):
        raise ValueError("One trace per packet member is required.")
    traces = [Fraction(t) for t in traces]
    constants = _normalization(table, normalization)
    return [
        c * sum(value * t for value, t in zip(row, traces))
        for c, row in zip(constants, table.entries)
    ]


@dataclass(frozen=True)
class InversionResult:
    """Traces recovered from the endoscopic sums."""

    table: PairingTable
    sigma_values: list[Fraction]
    recovered: list[Fraction]
    exact: bool

    def to_dict(self) -> dict:
        """Report payload with rationals written as strings."""
        return {
            "endoscopic": list(self.table.endoscopic),
            "packet": list(self.table.packet),
            "sigma_values": [str(v) for v in self.sigma_values],
            "recovered": [str(v) for v in self.recovered],
            "orthogonal": True,
            "exact": self.exact,
        }


def pairing_inversion_check(
    table: PairingTable,
    sigma_values: Sequence,
    normalization: Mapping[str, Fraction] | None = None,
) -> InversionResult:
    """trace pi(f) = (1 / #S_phi) sum_s <s, pi> Sigma_s / c(s), in rational arithmetic.

    Raises:
        NonOrthogonalTableError: if the table is not a normalised character table.
    """
    table.check_orthogonal()
    if len(sigma_values) != table.size:
        raise ValueError("One value per element of S_phi is required.")
    constants = _normalization(table, normalization)
    sigma = [Fraction(v) for v in sigma_values]
    n = Fraction(1, table.size)
    recovered = [
        n * sum(row[j] * s / c for row, s, c in zip(table.entries, sigma, constants))
        for j in range(len(table.packet))
    ]
    exact = sigma_from_traces(table, recovered, normalization) == sigma
    return InversionResult(table, sigma, recovered, exact)


@dataclass(frozen=True)
class PseudoCoefficientCombination:
    """Formal combination f^H = sum a(w, nu) g_nu with nu = w' mu over even w, w'."""

    mu: Weight
    coefficients: dict[tuple[WeylElement, WeylElement], Fraction]

    @property
    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return all(value == 0 for value in self.coefficients.values())

    def matrix(self) -> np.ndarray:
        """a(w, w' mu) with rows w and columns w' in the order of ``even_elements``."""
        order = even_elements()
        return np.array(
            [[float(self.coefficients[(w, v)]) for v in order] for w in order]
        )

    def apply(
        self, values: Mapping[WeylElement, complex]
    ) -> dict[WeylElement, complex]:
        """Apply the combination to a vector of traces indexed by even w'."""
        order = even_elements()
        vector = np.array([values[v] for v in order], dtype=complex)
        return dict(zip(order, self.matrix() @ vector))

    def dual_residual(self, values: Mapping[WeylElement, complex]) -> float:
        """Largest gap between ``apply`` and the sum of a(w, w' mu) trace_{w' mu}."""
        applied = self.apply(values)
        order = even_elements()
        explicit = {
            w: sum(float(self.coefficients[(w, v)]) * values[v] for v in order)
            for w in order
        }
        return max(abs(applied[w] - explicit[w]) for w in order)


def pseudo_coefficient_combination(
    mu: Weight, coefficients: Mapping[tuple[WeylElement, WeylElement], object]
) -> PseudoCoefficientCombination:
    """Record a combination; keys must be exactly the pairs of even elements.

    Raises:
        IndexMismatchError: for missing or extra keys.
    """
    expected = {(w, v) for w in even_elements() for v in even_elements()}
    keys = set(coefficients)
    if keys != expected:
        names = sorted(f"({w.name}, {v.name})" for w, v in keys ^ expected)
        raise IndexMismatchError(f"Coefficient keys do not match: {', '.join(names)}.")
    return PseudoCoefficientCombination(
        mu, {key: Fraction(value) for key, value in coefficients.items()}
    )


def kappa_coefficients(
    kappa: KappaCharacter,
    identification: CosetIdentification = CosetIdentification.PAIRED,
) -> dict[tuple[WeylElement, WeylElement], Fraction]:
    """a(w1, w2 mu) = kappa(w2) kappa(w2 w1)^-1."""
    return {
        (w1, w2): Fraction(kappa.on_weyl(w2, identification))
        / kappa.on_weyl(w2.compose(w1), identification)
        for w1 in even_elements()
        for w2 in even_elements()
    }


def zero_coefficients() -> dict[tuple[WeylElement, WeylElement], Fraction]:
    """a = 0."""
    return {(w, v): Fraction(0) for w in even_elements() for v in even_elements()}
