# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Smooth compactly supported test functions on matrix coordinates."""

from enum import Enum
from typing import Annotated, Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..algebra import ComplexMatrix3


class Coordinate(str, Enum):
    """Real or imaginary part of one matrix entry, or a scalar parameter."""

    RE00 = "re00"
    RE01 = "re01"
    RE02 = "re02"
    RE10 = "re10"
    RE11 = "re11"
    RE12 = "re12"
    RE20 = "re20"
    RE21 = "re21"
    RE22 = "re22"
    IM00 = "im00"
    IM01 = "im01"
    IM02 = "im02"
    IM10 = "im10"
    IM11 = "im11"
    IM12 = "im12"
    IM20 = "im20"
    IM21 = "im21"
    IM22 = "im22"
    T = "t"
    LAMBDA = "lambda"

    @property
    def is_parameter(self) -> bool:
        """Whether the coordinate is a scalar parameter rather than a matrix entry."""
        return self in (Coordinate.T, Coordinate.LAMBDA)

    @property
    def entry(self) -> tuple[int, int]:
        """Zero-based (row, column) of a matrix coordinate."""
        return int(self.value[2]), int(self.value[3])

    @property
    def imaginary(self) -> bool:
        """Whether the coordinate reads the imaginary part."""
        return self.value.startswith("im")

    def extract(self, matrix, params: Mapping[str, float] | None = None):
        """Read the coordinate from a matrix, or from ``params`` for scalars.

        ``matrix`` may carry leading batch dimensions: ``(..., 3, 3)``.
        """
        if self.is_parameter:
            if not params or self.value not in params:
                raise KeyError(f"Missing scalar parameter '{self.value}'.")
            return params[self.value]
        if isinstance(matrix, ComplexMatrix3):
            matrix = matrix.to_array()
        i, j = self.entry
        value = np.asarray(matrix)[..., i, j]
        return np.imag(value) if self.imaginary else np.real(value)


def bump_profile(s):
    """exp(-1 / (1 - s^2)) on |s| < 1 and 0 elsewhere, elementwise."""
    s = np.asarray(s, dtype=float)
    inside = np.abs(s) < 1
    safe = np.where(inside, s, 0.0)
    return np.where(inside, np.exp(-1.0 / (1.0 - safe**2)), 0.0)


def bump_profile_derivative(s):
    """Derivative of ``bump_profile``."""
    s = np.asarray(s, dtype=float)
    inside = np.abs(s) < 1
    safe = np.where(inside, s, 0.0)
    return np.where(
        inside, bump_profile(safe) * (-2.0 * safe / (1.0 - safe**2) ** 2), 0.0
    )


class BumpFactor(BaseModel):
    """One factor s -> profile((s - center) / radius) applied to a coordinate."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    coord: Coordinate
    center: float
    radius: Annotated[float, Field(gt=0)]

    @property
    def interval(self) -> tuple[float, float]:
        """Closed support interval [center - radius, center + radius]."""
        return self.center - self.radius, self.center + self.radius

    def __call__(self, value):
        """Evaluate the factor at coordinate values."""
        shifted = np.asarray(value, dtype=float) - self.center
        return bump_profile(shifted / self.radius)


class BumpFunction(BaseModel):
    """Product of bump factors times an amplitude.

    Serialises to ``{"amplitude": ..., "factors": [{"coord", "center", "radius"}]}``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    amplitude: float = 1.0
    factors: tuple[BumpFactor, ...] = ()

    @model_validator(mode="after")
    def validate_factors(self):
        """A test function needs at least one factor to be compactly supported."""
        if not self.factors:
            raise ValueError("A bump function needs at least one factor.")
        return self

    @property
    def coordinates(self) -> set[Coordinate]:
        """Coordinates read by at least one factor."""
        return {factor.coord for factor in self.factors}

    def evaluate_coordinates(self, values: Mapping[Coordinate, object]):
        """Product of the factors at the given coordinate values (arrays broadcast)."""
        result = self.amplitude
        for factor in self.factors:
            result = result * factor(values[factor.coord])
        return result

    def evaluate(self, g, params: Mapping[str, float] | None = None):
        """f(g) for a matrix, or a batch of matrices, plus scalar parameters."""
        values = {
            coord: coord.extract(g, params) for coord in self.coordinates
        }
        result = self.evaluate_coordinates(values)
        return float(result) if np.ndim(result) == 0 else result

    def support_box(self) -> list[tuple[float, float]]:
        """Support interval of every factor, in declaration order."""
        return [factor.interval for factor in self.factors]

    def support_interval(self, coord: Coordinate) -> tuple[float, float] | None:
        """Intersection of the factor intervals on one coordinate.

        None if no factor constrains it. An empty intersection is returned
        as (lo, hi) with lo > hi.
        """
        intervals = [f.interval for f in self.factors if f.coord == coord]
        if not intervals:
            return None
        return max(lo for lo, _ in intervals), min(hi for _, hi in intervals)

    def scaled(self, factor: float) -> "BumpFunction":
        """Copy with the amplitude multiplied by ``factor``."""
        return self.model_copy(update={"amplitude": self.amplitude * factor})
