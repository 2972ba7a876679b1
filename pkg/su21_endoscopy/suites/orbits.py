# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Coadjoint-orbit and parameter-enumeration suites."""

from collections import Counter

import numpy as np

from ..algebra import borel_element, random_group_element
from ..errors import NotBorelError
from ..orbits import (
    BFunctional,
    OrbitKind,
    PolarizationSign,
    check_polarization,
    classify_orbit,
    coadjoint_act,
)
from ..roots import (
    ParameterClass,
    classify_parameter,
    enumerate_parameters,
    pair,
)
from ..roots.parameters import H23
from .base import VerificationSuite

GENERIC_SHARE = 0.75
"""Share of samples drawn with z != 0 and a full Borel element."""

STRATUM_KINDS = ("cylinder", "half-plane-x", "half-plane-y", "origin")


class OrbitSuite(VerificationSuite):
    """Invariance of the orbit strata under the coadjoint action."""

    name = "orbits"

    def _generic_sample(self) -> tuple[BFunctional, tuple[float, ...]]:
        t, x, y = (float(v) for v in self.rng.normal(size=3))
        z = float(self.rng.choice((-1.0, 1.0)) * (abs(self.rng.normal()) + 0.1))
        return BFunctional(t, x, y, z), tuple(self.rng.uniform(-1, 1, size=4))

    def _stratum_sample(self) -> tuple[BFunctional, tuple[float, ...]]:
        kind = STRATUM_KINDS[self.rng.integers(len(STRATUM_KINDS))]
        t = float(self.rng.normal())
        signs = self.rng.choice((-1.0, 1.0), size=2)
        x, y = (float(v) for v in signs * self.rng.uniform(0.1, 2.0, size=2))
        if kind == "half-plane-x":
            y = 0.0
        elif kind == "half-plane-y":
            x = 0.0
        elif kind == "origin":
            x = y = 0.0
        return BFunctional(t, x, y, 0.0), (0.0, *self.rng.uniform(-1, 1, size=3))

    def run(self) -> dict:
        """Run the checks."""
        tol = self.config.orbit_tol
        samples = self.config.orbit_samples
        kinds = Counter()
        mismatches = 0
        z_drift = alpha_drift = 0.0
        for index in range(samples):
            if index < GENERIC_SHARE * samples:
                functional, coordinates = self._generic_sample()
            else:
                functional, coordinates = self._stratum_sample()
            b = borel_element(*coordinates, tol=self.config.structure_tol)
            image = coadjoint_act(b, functional, tol)
            before, after = classify_orbit(functional, tol), classify_orbit(image, tol)
            kinds[before.name] += 1
            if before.kind is not after.kind:
                mismatches += 1
            scale = max(1.0, float(np.max(np.abs(functional.to_vector()))))
            z_drift = max(z_drift, abs(image.z - functional.z) / scale)
            if before.kind is OrbitKind.CYLINDER and after.kind is OrbitKind.CYLINDER:
                alpha_drift = max(alpha_drift, abs(after.alpha - before.alpha) / scale)
        self._check("classification-invariant", mismatches == 0, mismatches)
        self._check("z-invariant", z_drift <= tol, z_drift)
        self._check("cylinder-alpha-invariant", alpha_drift <= tol, alpha_drift)

        # the torus rotates (x, y), so alpha is not an invariant of the full Borel
        cylinder = BFunctional(0.0, 1.0, 1.0, 0.0)
        rotated = coadjoint_act(
            borel_element(1.0, 0.0, 0.0, 0.0, tol=self.config.structure_tol),
            cylinder,
            tol,
        )
        torus_flow = dict(
            alpha_before=classify_orbit(cylinder, tol).alpha,
            alpha_after=rotated.x * rotated.y,
        )

        self._expect_error(
            "non-borel",
            NotBorelError,
            coadjoint_act,
            random_group_element(self.rng, self.config.structure_tol),
            cylinder,
            tol,
        )

        plus = check_polarization(PolarizationSign.PLUS, BFunctional(0, 0, 0, 1))
        minus = check_polarization(PolarizationSign.MINUS, BFunctional(0, 0, 0, -1))
        zero = check_polarization(PolarizationSign.PLUS, BFunctional(0, 0, 0, 0))
        self._check("polarization-plus", plus.is_polarization and plus.positive)
        self._check("polarization-minus", minus.is_polarization and minus.positive)
        self._check("polarization-origin", zero.is_polarization and not zero.positive)
        return dict(
            samples=samples, kinds=dict(sorted(kinds.items())), torus_flow=torus_flow
        )


class ParameterSuite(VerificationSuite):
    """Enumeration of Harish-Chandra parameters against the trichotomy."""

    name = "parameters"

    def run(self) -> dict:
        """Run the checks."""
        records = enumerate_parameters(self.config.enumeration_bound)
        disagreements = [
            str(r.weight)
            for r in records
            if classify_parameter(r.weight) is not r.parameter_class
        ]
        self._check("classification-agrees", not disagreements, len(disagreements))
        holomorphic = [
            r for r in records if r.parameter_class is ParameterClass.HOLOMORPHIC
        ]
        self._check(
            "holomorphic-h23-negative",
            bool(holomorphic) and all(pair(r.weight, H23) < 0 for r in holomorphic),
        )
        counts = Counter(r.parameter_class.value for r in records)
        return dict(
            bound=self.config.enumeration_bound,
            rows=len(records),
            counts=dict(sorted(counts.items())),
            multi_match=sum(r.multi_match for r in records),
        )
