# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Root data, Weyl groups and Harish-Chandra parameters."""

from .parameters import (
    ParameterClass,
    ParameterRecord,
    classify_parameter,
    enumerate_parameters,
)
from .weights import (
    POSITIVE_ROOTS,
    RHO,
    Coroot,
    Root,
    RootKind,
    Weight,
    chamber_sign,
    is_regular,
    pair,
    root_system,
)
from .weyl import (
    CYCLE,
    CYCLE_SQUARED,
    IDENTITY,
    S12,
    WeylElement,
    compact_weyl_group,
    coset_representatives,
    even_elements,
    weyl_act,
    weyl_group,
)

__all__ = (
    "CYCLE",
    "CYCLE_SQUARED",
    "Coroot",
    "IDENTITY",
    "POSITIVE_ROOTS",
    "ParameterClass",
    "ParameterRecord",
    "RHO",
    "Root",
    "RootKind",
    "S12",
    "Weight",
    "WeylElement",
    "chamber_sign",
    "classify_parameter",
    "compact_weyl_group",
    "coset_representatives",
    "enumerate_parameters",
    "even_elements",
    "is_regular",
    "pair",
    "root_system",
    "weyl_act",
    "weyl_group",
)
