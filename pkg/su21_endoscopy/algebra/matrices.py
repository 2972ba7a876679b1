# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Exact and float 3x3 complex matrices."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable

import numpy as np
import sympy

from ..errors import ModeMismatchError, SingularMatrixError

FLOAT_EPS = 1e-12
"""Default tolerance attached to float-mode predicates."""


class Mode(Enum):
    """Arithmetic mode of a matrix."""

    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True, eq=False)
class ComplexMatrix3:
    """A 3x3 complex matrix.

    Exact matrices hold a ``sympy.ImmutableMatrix`` of Gaussian rationals and
    never round. Float matrices hold a ``numpy`` complex array and carry the
    tolerance used by membership predicates.
    """

    entries: Any
    mode: Mode
    tol: float = FLOAT_EPS

    @classmethod
    def exact(cls, rows: Iterable[Iterable[Any]]) -> "ComplexMatrix3":
        """Build an exact matrix, converting entries with ``sympy.nsimplify``."""
        matrix = sympy.ImmutableMatrix(
            [[sympy.nsimplify(value) for value in row] for row in rows]
        )
        if matrix.shape != (3, 3):
            raise ValueError(f"Expected a 3x3 matrix, got {matrix.shape}.")
        return cls(matrix, Mode.EXACT)

    @classmethod
    def from_array(cls, array, tol: float = FLOAT_EPS) -> "ComplexMatrix3":
        """Build a float matrix from anything ``numpy`` can read."""
        values = np.array(array, dtype=complex)
        if values.shape != (3, 3):
            raise ValueError(f"Expected a 3x3 matrix, got {values.shape}.")
        values.setflags(write=False)
        return cls(values, Mode.FLOAT, tol)

    @classmethod
    def identity(cls, mode: Mode = Mode.FLOAT) -> "ComplexMatrix3":
        """Identity matrix in the requested mode."""
        if mode is Mode.EXACT:
            return cls(sympy.ImmutableMatrix(sympy.eye(3)), Mode.EXACT)
        return cls.from_array(np.eye(3))

    @classmethod
    def zero(cls, mode: Mode = Mode.FLOAT) -> "ComplexMatrix3":
        """Zero matrix in the requested mode."""
        if mode is Mode.EXACT:
            return cls(sympy.ImmutableMatrix(sympy.zeros(3, 3)), Mode.EXACT)
        return cls.from_array(np.zeros((3, 3)))

    @property
    def is_exact(self) -> bool:
        """Whether arithmetic on this matrix is exact."""
        return self.mode is Mode.EXACT

    def _check_mode(self, other: "ComplexMatrix3") -> None:
        if self.mode is not other.mode:
            raise ModeMismatchError(
                f"Cannot combine {self.mode.value} and {other.mode.value} matrices."
            )

    def _wrap(self, entries) -> "ComplexMatrix3":
        if self.is_exact:
            return ComplexMatrix3(
                sympy.ImmutableMatrix(entries).applyfunc(sympy.expand), Mode.EXACT
            )
        return ComplexMatrix3.from_array(entries, self.tol)

    def __add__(self, other: "ComplexMatrix3") -> "ComplexMatrix3":
        self._check_mode(other)
        return self._wrap(self.entries + other.entries)

    def __sub__(self, other: "ComplexMatrix3") -> "ComplexMatrix3":
        self._check_mode(other)
        return self._wrap(self.entries - other.entries)

    def __neg__(self) -> "ComplexMatrix3":
        return self._wrap(-self.entries)

    def __matmul__(self, other: "ComplexMatrix3") -> "ComplexMatrix3":
        self._check_mode(other)
        return self._wrap(self.entries @ other.entries)

    def scale(self, factor) -> "ComplexMatrix3":
        """Multiply every entry by a scalar."""
        if self.is_exact:
            return self._wrap(sympy.nsimplify(factor) * self.entries)
        return self._wrap(complex(factor) * self.entries)

    def dagger(self) -> "ComplexMatrix3":
        """Conjugate transpose."""
        if self.is_exact:
            return self._wrap(self.entries.H)
        return self._wrap(self.entries.conj().T)

    def transpose(self) -> "ComplexMatrix3":
        """Plain transpose."""
        return self._wrap(self.entries.T)

    def trace(self):
        """Trace, exact or complex."""
        if self.is_exact:
            return sympy.expand(self.entries.trace())
        return complex(np.trace(self.entries))

    def det(self):
        """Determinant, exact or complex."""
        if self.is_exact:
            return sympy.expand(self.entries.det())
        return complex(np.linalg.det(self.entries))

    def inverse(self) -> "ComplexMatrix3":
        """Matrix inverse.

        Raises:
            SingularMatrixError: if the matrix is not invertible.
        """
        if self.is_exact:
            if self.det() == 0:
                raise SingularMatrixError("Exact matrix has zero determinant.")
            return self._wrap(self.entries.inv())
        if abs(np.linalg.det(self.entries)) <= self.tol:
            raise SingularMatrixError("Float matrix is numerically singular.")
        return self._wrap(np.linalg.inv(self.entries))

    def max_abs(self) -> float:
        """Largest entry modulus, as a float."""
        return float(np.max(np.abs(self.to_array())))

    def is_zero(self, tol: float | None = None) -> bool:
        """Exact zero test in exact mode, ``max_abs <= tol`` in float mode."""
        if self.is_exact:
            return all(sympy.expand(value) == 0 for value in self.entries)
        return self.max_abs() <= (self.tol if tol is None else tol)

    def equals(self, other: "ComplexMatrix3", tol: float | None = None) -> bool:
        """Compare two matrices of the same mode."""
        return (self - other).is_zero(tol)

    def to_array(self) -> np.ndarray:
        """Complex ``numpy`` copy of the entries."""
        if self.is_exact:
            return np.array(self.entries.evalf(), dtype=complex)
        return np.array(self.entries, dtype=complex)

    def to_float(self, tol: float = FLOAT_EPS) -> "ComplexMatrix3":
        """Float-mode copy of this matrix."""
        return ComplexMatrix3.from_array(self.to_array(), tol)

    def rows(self) -> list[list[str]]:
        """Entries rendered as strings, row by row."""
        if self.is_exact:
            return [[str(self.entries[i, j]) for j in range(3)] for i in range(3)]
        return [[repr(complex(v)) for v in row] for row in self.entries]

    def __getitem__(self, index):
        return self.entries[index]
