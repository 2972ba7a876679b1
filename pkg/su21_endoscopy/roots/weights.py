# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Weights, coroots and the root system of sl(3) relative to the compact Cartan."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

Rational = int | Fraction | str


@dataclass(frozen=True, order=True)
class Weight:
    """A functional on the compact Cartan, stored as an exact triple with zero sum."""

    coords: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        """Normalise coordinates to fractions and check the trace condition."""
        coords = tuple(Fraction(value) for value in self.coords)
        if len(coords) != 3:
            raise ValueError("A weight has exactly three coordinates.")
        if sum(coords) != 0:
            raise ValueError(f"Weight coordinates must sum to zero, got {coords}.")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: Rational) -> "Weight":
        """Build a weight from three rationals."""
        return cls(tuple(Fraction(value) for value in coords))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse "l1,l2,l3" where each entry is an integer or a fraction."""
        return cls.of(*(part.strip() for part in text.split(",")))

    @classmethod
    def zero(cls) -> "Weight":
        """The zero weight."""
        return cls.of(0, 0, 0)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, factor: Rational) -> "Weight":
        """Rational multiple of the weight."""
        return Weight(tuple(Fraction(factor) * a for a in self.coords))

    def dot(self, angles: Iterable[float]) -> float:
        """<lambda, theta> for a float angle triple."""
        return float(sum(float(a) * t for a, t in zip(self.coords, angles)))

    @property
    def is_integral(self) -> bool:
        """Whether every coordinate is an integer."""
        return all(a.denominator == 1 for a in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


@dataclass(frozen=True, order=True)
class Coroot:
    """H_kl = E_kk - E_ll (1-based indices)."""

    k: int
    l: int

    @property
    def name(self) -> str:
        """Label such as "H12"."""
        return f"H{self.k}{self.l}"

    @property
    def diagonal(self) -> tuple[int, int, int]:
        """Integer diagonal of the coroot matrix."""
        values = [0, 0, 0]
        values[self.k - 1] += 1
        values[self.l - 1] -= 1
        return tuple(values)

    def __neg__(self) -> "Coroot":
        return Coroot(self.l, self.k)


class RootKind(Enum):
    """Compact roots live in the complexified Lie algebra of K."""

    COMPACT = "compact"
    NONCOMPACT = "noncompact"


@dataclass(frozen=True)
class Root:
    """alpha_kl = e_k - e_l with its kind and coroot."""

    k: int
    l: int

    @property
    def name(self) -> str:
        """Label such as "a12"."""
        return f"a{self.k}{self.l}"

    @property
    def weight(self) -> Weight:
        """alpha_kl as a weight."""
        coords = [0, 0, 0]
        coords[self.k - 1] += 1
        coords[self.l - 1] -= 1
        return Weight.of(*coords)

    @property
    def coroot(self) -> Coroot:
        """H_kl."""
        return Coroot(self.k, self.l)

    @property
    def kind(self) -> RootKind:
        """Compact iff the root is +-alpha_12."""
        if {self.k, self.l} == {1, 2}:
            return RootKind.COMPACT
        return RootKind.NONCOMPACT

    def __neg__(self) -> "Root":
        return Root(self.l, self.k)


POSITIVE_ROOTS = (Root(1, 2), Root(3, 2), Root(3, 1))
"""Positive system {alpha_12, alpha_32, alpha_31}."""

ALL_COROOTS = (
    Coroot(1, 2),
    Coroot(2, 1),
    Coroot(2, 3),
    Coroot(3, 2),
    Coroot(1, 3),
    Coroot(3, 1),
)
"""The six coroots in reporting order."""

RHO = Weight.of(0, -1, 1)
"""Half-sum of the positive roots, equal to alpha_32."""


def root_system() -> list[Root]:
    """The six roots, positive ones first."""
    return list(POSITIVE_ROOTS) + [-root for root in POSITIVE_ROOTS]


def half_sum_positive() -> Weight:
    """Half of the sum of POSITIVE_ROOTS, computed exactly."""
    total = Weight.zero()
    for root in POSITIVE_ROOTS:
        total = total + root.weight
    return total.scale(Fraction(1, 2))


def pair(weight: Weight, coroot: Coroot) -> Fraction:
    """lambda(H_kl) = lambda_k - lambda_l."""
    return weight.coords[coroot.k - 1] - weight.coords[coroot.l - 1]


def pairings(weight: Weight) -> dict[str, Fraction]:
    """Values of the weight on ALL_COROOTS, keyed by coroot name."""
    return {coroot.name: pair(weight, coroot) for coroot in ALL_COROOTS}


def is_regular(weight: Weight) -> bool:
    """Whether the weight pairs nontrivially with every coroot."""
    return all(pair(weight, root.coroot) != 0 for root in POSITIVE_ROOTS)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def chamber_sign(weight: Weight) -> int:
    """Product over positive roots of the sign of lambda(H_alpha); 0 if irregular."""
    result = 1
    for root in POSITIVE_ROOTS:
        result *= _sign(pair(weight, root.coroot))
    return result
