# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Verification suites."""

from .base import VerificationSuite
from .registry import SUITES, run_suites
from .states import SuiteState, SummaryStateCalculator, exit_code

__all__ = (
    "SUITES",
    "SuiteState",
    "SummaryStateCalculator",
    "VerificationSuite",
    "exit_code",
    "run_suites",
)
