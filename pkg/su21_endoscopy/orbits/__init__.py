# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Coadjoint orbits of the Borel subgroup."""

from .classes import OrbitClass, OrbitKind, classify_orbit
from .coadjoint import BFunctional, ad_matrix, coadjoint_act
from .polarization import (
    PolarizationCheck,
    PolarizationSign,
    check_polarization,
    is_polarization,
)

__all__ = (
    "BFunctional",
    "OrbitClass",
    "OrbitKind",
    "PolarizationCheck",
    "PolarizationSign",
    "ad_matrix",
    "check_polarization",
    "classify_orbit",
    "coadjoint_act",
    "is_polarization",
)
