# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Serializer fixtures."""

import pytest

from su21_endoscopy.endoscopy import pairing_inversion_check, two_element_table
from su21_endoscopy.roots import enumerate_parameters


@pytest.fixture()
def enumeration_rows():
    """Parameter enumeration rows for bound 2."""
    return [record.to_row() for record in enumerate_parameters(2)]


@pytest.fixture()
def inversion_report():
    """Inversion payload of the two-element table."""
    return pairing_inversion_check(two_element_table(), (7, 1)).to_dict()
