# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Default configuration for the verification suites."""

#
# Tolerances
#
ENDOSCOPY_STRUCTURE_TOL = 1e-10
"""Tolerance for float group membership and decomposition checks."""

ENDOSCOPY_ORBIT_TOL = 1e-9
"""Tolerance used by the coadjoint orbit classifier."""

ENDOSCOPY_QUAD_TOL = 1e-9
"""Absolute error target for orbital integral quadrature."""

ENDOSCOPY_TRANSFER_TOL = 1e-8
"""Maximum residual accepted by the transfer identity check."""

ENDOSCOPY_ELLIPTIC_RTOL = 1e-6
"""Relative agreement required between quadrature and closed form."""

#
# Sampling
#
ENDOSCOPY_SEED = 20250101
"""Seed of the only random generator used by the suites."""

ENDOSCOPY_ORBIT_SAMPLES = 1000
"""Number of random (b, F) pairs for the orbit invariance suite."""

ENDOSCOPY_GROUP_SAMPLES = 1000
"""Number of random group elements for exponential and Iwasawa checks."""

ENDOSCOPY_ELLIPTIC_PAIRS = 20
"""Number of random (gamma, f) pairs for the elliptic suite."""

ENDOSCOPY_ELLIPTIC_GAP = 0.1
"""Minimal eigenvalue gap for randomly drawn elliptic gammas."""

ENDOSCOPY_TRANSFER_GRID = 32
"""Number of regular torus points for the transfer identity."""

ENDOSCOPY_CALIBRATION_GRID = 16
"""Number of held-out torus points for convention calibration."""

ENDOSCOPY_GRID_MARGIN = 0.1
"""Smallest accepted |2 sin(d/2)| over angle differences of a grid point."""

ENDOSCOPY_ENUMERATION_BOUND = 5
"""Pairing bound for the Harish-Chandra parameter enumeration."""

ENDOSCOPY_DYADIC_RANGE = (3, 10)
"""Exponents k of the dyadic sequence lambda = 2**-k for the theta case."""

ENDOSCOPY_CONDITION_LIMIT = 1e8
"""Condition number guard of the singular expansion fit."""

#
# Reference data
#
ENDOSCOPY_REFERENCE_MU = (3, 2, -5)
"""Reference regular parameter of the transfer identity."""

ENDOSCOPY_REFERENCE_ELLIPTIC_BUMP = {
    "amplitude": 1.0,
    "factors": [
        {"coord": "re01", "center": 0.0, "radius": 1.0},
        {"coord": "re12", "center": 0.0, "radius": 1.0},
        {"coord": "re02", "center": 0.2, "radius": 1.0},
        {"coord": "re00", "center": 1.5, "radius": 3.0},
    ],
}
"""Bump confining the three upper entries, used at diag(2, 1, 1/2)."""

ENDOSCOPY_REFERENCE_THETA_BUMP = {
    "amplitude": 1.0,
    "factors": [
        {"coord": "re01", "center": 0.25, "radius": 1.0},
        {"coord": "re10", "center": 0.1, "radius": 0.5},
        {"coord": "re00", "center": 1.0, "radius": 0.5},
    ],
}
"""Reference test function of the theta case, as bump JSON."""

ENDOSCOPY_REPORT_SCHEMA = 1
"""Version stamped on every emitted report."""
