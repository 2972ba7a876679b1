# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Run configuration assembled from the ``ENDOSCOPY_*`` defaults."""

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from . import config
from .functions import BumpFunction
from .serializers.utils import generate_error_messages

CONFIG_PREFIX = "ENDOSCOPY_"


def config_defaults(prefix: str = CONFIG_PREFIX) -> dict:
    """Values of the config module keyed by their lower-cased unprefixed name."""
    return {
        key[len(prefix) :].lower(): getattr(config, key)
        for key in dir(config)
        if key.startswith(prefix)
    }


_DEFAULTS = config_defaults()

Tolerance = Annotated[float, Field(gt=0)]
Count = Annotated[int, Field(ge=1)]


class RunConfig(BaseModel):
    """Tolerances, sample sizes and reference data of one verification run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    structure_tol: Tolerance = _DEFAULTS["structure_tol"]
    orbit_tol: Tolerance = _DEFAULTS["orbit_tol"]
    quad_tol: Tolerance = _DEFAULTS["quad_tol"]
    transfer_tol: Tolerance = _DEFAULTS["transfer_tol"]
    elliptic_rtol: Tolerance = _DEFAULTS["elliptic_rtol"]
    seed: Annotated[int, Field(ge=0)] = _DEFAULTS["seed"]
    orbit_samples: Count = _DEFAULTS["orbit_samples"]
    group_samples: Count = _DEFAULTS["group_samples"]
    elliptic_pairs: Count = _DEFAULTS["elliptic_pairs"]
    elliptic_gap: Tolerance = _DEFAULTS["elliptic_gap"]
    transfer_grid: Count = _DEFAULTS["transfer_grid"]
    calibration_grid: Count = _DEFAULTS["calibration_grid"]
    grid_margin: Annotated[float, Field(gt=0, lt=2)] = _DEFAULTS["grid_margin"]
    enumeration_bound: Count = _DEFAULTS["enumeration_bound"]
    dyadic_range: tuple[int, int] = _DEFAULTS["dyadic_range"]
    condition_limit: Tolerance = _DEFAULTS["condition_limit"]
    reference_mu: tuple[int, int, int] = _DEFAULTS["reference_mu"]
    reference_elliptic_bump: BumpFunction = BumpFunction.model_validate(
        _DEFAULTS["reference_elliptic_bump"]
    )
    reference_theta_bump: BumpFunction = BumpFunction.model_validate(
        _DEFAULTS["reference_theta_bump"]
    )
    report_schema: int = _DEFAULTS["report_schema"]

    @field_validator("dyadic_range")
    @classmethod
    def validate_dyadic_range(cls, value: tuple[int, int]) -> tuple[int, int]:
        """The singular fit needs at least eight dyadic points, starting at k >= 1."""
        start, stop = value
        if start < 1 or stop - start + 1 < 8:
            raise ValueError(
                "Dyadic range must start at k >= 1 and hold 8 or more points."
            )
        return value

    @field_validator("reference_mu")
    @classmethod
    def validate_reference_mu(cls, value: tuple[int, int, int]) -> tuple[int, int, int]:
        """Coordinates of a weight sum to zero."""
        if sum(value) != 0:
            raise ValueError("Reference parameter coordinates must sum to zero.")
        return value

    @classmethod
    def from_overrides(cls, **overrides) -> tuple["RunConfig | None", list[dict]]:
        """Build a config from keyword overrides; errors are returned, not raised."""
        try:
            return cls(**overrides), []
        except ValidationError as e:
            return None, generate_error_messages(e.errors())
