# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Base verification suite."""

import logging
from abc import ABC, abstractmethod

import numpy as np

from ..serializers.utils import exception_error
from ..settings import RunConfig
from .states import SuiteState

logger = logging.getLogger(__name__)


class VerificationSuite(ABC):
    """Base suite class: named checks, error dicts and a payload."""

    name: str = ""

    def __init__(self, config: RunConfig):
        """Initialize the suite."""
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self._checks: list[dict] = []
        self._errors: list[dict] = []
        self.is_successful = True

    @abstractmethod
    def run(self) -> dict:
        """Run the checks and return the payload."""

    @property
    def errors(self) -> list[dict]:
        """Return the list of errors."""
        return self._errors

    @property
    def checks(self) -> list[dict]:
        """Return the recorded checks."""
        return self._checks

    def _add_error(self, error: dict) -> None:
        """Add an error to the errors list."""
        self._errors.append(error)
        self.is_successful = False

    def _check(
        self,
        name: str,
        ok: bool,
        residual: float | None = None,
        msg: str | None = None,
    ) -> bool:
        """Record a named check."""
        ok = bool(ok)
        self._checks.append(
            dict(
                name=name,
                passed=ok,
                residual=None if residual is None else float(residual),
                msg=msg,
            )
        )
        if not ok:
            logger.info("Check %s.%s failed (residual %s).", self.name, name, residual)
            self.is_successful = False
        return ok

    def _expect_error(self, name: str, error: type[Exception], func, *args, **kwargs):
        """Record a check that ``func`` raises ``error``."""
        try:
            func(*args, **kwargs)
        except error as e:
            return self._check(name, True, msg=str(e))
        return self._check(name, False, msg=f"{error.__name__} was not raised")

    @property
    def state(self) -> SuiteState:
        """Errored if anything raised, failed if a check failed."""
        if self._errors:
            return SuiteState.ERRORED
        if not self.is_successful:
            return SuiteState.FAILED
        return SuiteState.PASSED

    def execute(self) -> dict:
        """Run the suite, turning any exception into an error entry."""
        logger.info("Running suite %s.", self.name)
        payload = {}
        try:
            payload = self.run()
        except Exception as e:
            logger.exception("Suite %s raised.", self.name)
            self._add_error(exception_error(e, self.name))
        logger.info("Suite %s finished: %s.", self.name, self.state.value)
        return dict(
            name=self.name,
            state=self.state.value,
            checks=self.checks,
            errors=self.errors,
            payload=payload,
        )
