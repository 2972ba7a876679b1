# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""States of verification suites and of a whole run."""

from enum import Enum
from typing import Dict


class SuiteState(Enum):
    """Outcome of one suite."""

    PASSED = "passed"
    FAILED = "failed"
    ERRORED = "errored"


class SummaryStateCalculator:
    """Calculate the run state based on suite states."""

    @staticmethod
    def calculate_summary_state(suite_states: Dict[str, int]) -> str:
        """
        Calculate the run state based on suite state counts.

        Args:
            suite_states: Dictionary with state names as keys and counts as values

        Returns:
            Run state string
        """

        def state_count(state: Enum) -> int:
            """Helper function to get the count for a given state."""
            return suite_states.get(state.value, 0)

        if state_count(SuiteState.ERRORED) > 0:
            return SuiteState.ERRORED.value
        if state_count(SuiteState.FAILED) > 0:
            return SuiteState.FAILED.value
        return SuiteState.PASSED.value


def exit_code(state: str) -> int:
    """0 when everything passed, 1 otherwise."""
    return 0 if state == SuiteState.PASSED.value else 1
