# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Matrix algebra of SU(2,1)."""

from .basis import (
    PRINTED_GENERATORS,
    AlgebraElement,
    BasisChoice,
    audit_basis,
    borel_basis,
    bracket,
    corrected_basis,
    is_algebra_member,
)
from .group import (
    GroupElement,
    borel_element,
    cartan_involution,
    certify,
    in_group,
    is_borel,
    mat_exp,
    random_algebra_member,
    random_group_element,
)
from .iwasawa import IwasawaFactors, iwasawa_decompose
from .matrices import ComplexMatrix3, Mode

__all__ = (
    "AlgebraElement",
    "BasisChoice",
    "ComplexMatrix3",
    "GroupElement",
    "IwasawaFactors",
    "Mode",
    "PRINTED_GENERATORS",
    "audit_basis",
    "borel_basis",
    "borel_element",
    "bracket",
    "cartan_involution",
    "certify",
    "corrected_basis",
    "in_group",
    "is_algebra_member",
    "is_borel",
    "iwasawa_decompose",
    "mat_exp",
    "random_algebra_member",
    "random_group_element",
)
