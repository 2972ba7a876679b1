# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""General fixtures."""

import numpy as np
import pytest

from su21_endoscopy import RunConfig
from su21_endoscopy.config import ENDOSCOPY_SEED
from su21_endoscopy.endoscopy import EllipticElement
from su21_endoscopy.functions import BumpFunction
from su21_endoscopy.roots import Weight


@pytest.fixture()
def rng():
    """Seeded generator, fresh for every test."""
    return np.random.default_rng(ENDOSCOPY_SEED)


@pytest.fixture(scope="session")
def small_config():
    """Run configuration with reduced sample sizes."""
    return RunConfig(
        orbit_samples=40,
        group_samples=5,
        elliptic_pairs=1,
        transfer_grid=8,
        calibration_grid=6,
        enumeration_bound=3,
        quad_tol=1e-7,
        elliptic_rtol=1e-5,
    )


@pytest.fixture(scope="session")
def reference_mu():
    """Reference regular parameter (3, 2, -5)."""
    return Weight.of(3, 2, -5)


@pytest.fixture(scope="session")
def reference_gamma():
    """diag(e^{i pi/2}, 1, e^{-i pi/2})."""
    return EllipticElement((np.pi / 2, 0.0, -np.pi / 2))


@pytest.fixture(scope="session")
def unit_bump():
    """Single factor on the (1, 2) entry, centered at 0 with radius 1."""
    return BumpFunction.model_validate(
        {"factors": [{"coord": "re01", "center": 0.0, "radius": 1.0}]}
    )
