# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Harish-Chandra parameters and the holomorphic trichotomy."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .weights import ALL_COROOTS, Coroot, Weight, is_regular, pair


class ParameterClass(Enum):
    """Chamber type of a Harish-Chandra parameter."""

    HOLOMORPHIC = "holomorphic"
    ANTI_HOLOMORPHIC = "anti-holomorphic"
    NEITHER_NOR = "neither-nor"
    NOT_REGULAR = "not regular"
    NOT_IN_F0 = "not in F0"


H12, H21, H23, H13, H31 = (
    Coroot(1, 2),
    Coroot(2, 1),
    Coroot(2, 3),
    Coroot(1, 3),
    Coroot(3, 1),
)


def _positive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value > 0


def _branches(weight: Weight) -> list[ParameterClass]:
    """Every branch of the trichotomy the weight satisfies, in printed order."""
    h12, h23 = pair(weight, H12), pair(weight, H23)
    h13, h31 = pair(weight, H13), pair(weight, H31)
    matches = []
    if _positive_integer(h12) and _positive_integer(h31):
        matches.append(ParameterClass.HOLOMORPHIC)
    if _positive_integer(h12) and _positive_integer(h23):
        matches.append(ParameterClass.ANTI_HOLOMORPHIC)
    if _positive_integer(h12) and _positive_integer(h13) and h12 > h13:
        matches.append(ParameterClass.NEITHER_NOR)
    return matches


def classify_parameter(weight: Weight) -> ParameterClass:
    """Classify a weight, taking the first matching branch in printed order."""
    if not is_regular(weight):
        return ParameterClass.NOT_REGULAR
    matches = _branches(weight)
    return matches[0] if matches else ParameterClass.NOT_IN_F0


@dataclass(frozen=True)
class ParameterRecord:
    """One row of the parameter enumeration."""

    weight: Weight
    parameter_class: ParameterClass
    multi_match: bool

    def to_row(self) -> dict:
        """Flat row with coordinates, the six pairings, class and overlap flag."""
        row = {f"l{i + 1}": str(c) for i, c in enumerate(self.weight.coords)}
        row.update({c.name: str(pair(self.weight, c)) for c in ALL_COROOTS})
        row["class"] = self.parameter_class.value
        row["multi_match"] = self.multi_match
        return row


def weight_from_pairings(h12: int, h23: int) -> Weight:
    """The unique weight with lambda(H12) = h12 and lambda(H23) = h23."""
    l2 = Fraction(h23 - h12, 3)
    return Weight.of(l2 + h12, l2, l2 - h23)


def enumerate_parameters(bound: int) -> list[ParameterRecord]:
    """Regular weights whose pairings are integers of modulus at most ``bound``."""
    if bound < 1:
        raise ValueError("Enumeration bound must be at least 1.")
    records = []
    for h12 in range(-bound, bound + 1):
        for h23 in range(-bound, bound + 1):
            if h12 == 0 or h23 == 0 or h12 + h23 == 0 or abs(h12 + h23) > bound:
                continue
            weight = weight_from_pairings(h12, h23)
            records.append(
                ParameterRecord(
                    weight=weight,
                    parameter_class=classify_parameter(weight),
                    multi_match=len(_branches(weight)) > 1,
                )
            )
    return records
