# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Test functions for orbital integrals."""

from .bump import (
    BumpFactor,
    BumpFunction,
    Coordinate,
    bump_profile,
    bump_profile_derivative,
)

__all__ = (
    "BumpFactor",
    "BumpFunction",
    "Coordinate",
    "bump_profile",
    "bump_profile_derivative",
)
