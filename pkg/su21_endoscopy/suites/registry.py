# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Suite registry and the verify-all runner."""

import logging
from collections import Counter

from ..errors import WorkbenchError
from ..settings import RunConfig
from .algebra import AuditSuite, StructureSuite
from .base import VerificationSuite
from .endoscopy import InversionSuite, PacketSuite, TransferSuite
from .orbits import OrbitSuite, ParameterSuite
from .quadrature import EllipticSuite, ThetaSuite
from .states import SuiteState, SummaryStateCalculator

logger = logging.getLogger(__name__)

SUITES: dict[str, type[VerificationSuite]] = {
    suite.name: suite
    for suite in (
        StructureSuite,
        AuditSuite,
        OrbitSuite,
        ParameterSuite,
        EllipticSuite,
        ThetaSuite,
        TransferSuite,
        InversionSuite,
        PacketSuite,
    )
}
"""Suites in their reporting order."""


def run_suites(config: RunConfig, names: list[str] | None = None) -> dict:
    """Run the named suites (all by default) and summarise their states.

    Raises:
        WorkbenchError: for an unknown suite name.
    """
    names = list(SUITES) if names is None else names
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise WorkbenchError(f"Unknown suites: {', '.join(unknown)}.")
    results = [SUITES[name](config).execute() for name in names]
    counts = Counter(result["state"] for result in results)
    counts = {state.value: counts.get(state.value, 0) for state in SuiteState}
    state = SummaryStateCalculator.calculate_summary_state(counts)
    logger.info("Verification finished: %s %s.", state, counts)
    return dict(
        state=state,
        counts=counts,
        suites=results,
        config=config.model_dump(mode="json"),
    )
