# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Exceptions for SU21-Endoscopy."""


class WorkbenchError(Exception):
    """Base exception for every verification failure raised by the workbench."""


#
# Algebra
#
class ModeMismatchError(WorkbenchError):
    """Exception raised when exact and float matrices are mixed."""


class SingularMatrixError(WorkbenchError):
    """Exception raised when a group matrix cannot be inverted."""


class NotInGroupError(WorkbenchError):
    """Exception raised when a matrix fails the SU(2,1) membership test."""


class NotBorelError(WorkbenchError):
    """Exception raised when an element is not in the Borel subgroup."""


#
# Quadrature
#
class DegenerateGammaError(WorkbenchError):
    """Exception raised when the eigenvalues of gamma are too close together."""


class SupportUnboundedError(WorkbenchError):
    """Exception raised when the support preimage of a test function is unbounded."""


class LambdaOutOfRangeError(WorkbenchError):
    """Exception raised when lambda is outside 0 < |lambda| <= 1."""


class IllConditionedFitError(WorkbenchError):
    """Exception raised when a least-squares design matrix is ill conditioned."""


class QuadratureNotConvergedError(WorkbenchError):
    """Exception raised when a cubature misses its error target."""


#
# Characters and endoscopy
#
class IrregularElementError(WorkbenchError):
    """Exception raised when a torus element is not regular."""


class IrregularParameterError(WorkbenchError):
    """Exception raised when a Harish-Chandra parameter is not regular."""


class ConstraintViolationError(WorkbenchError):
    """Exception raised when the endoscopic embedding leaves the group."""


class UnmatchedPairError(WorkbenchError):
    """Exception raised when gamma and gamma_H do not correspond."""


class IndexMismatchError(WorkbenchError):
    """Exception raised when coefficients are not indexed by the even Weyl elements."""


class NonOrthogonalTableError(WorkbenchError):
    """Exception raised when a pairing table is not orthogonal."""
