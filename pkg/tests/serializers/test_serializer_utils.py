# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Unit tests for serializer utilities."""

import numpy as np
from pydantic import ValidationError

from su21_endoscopy.functions import BumpFunction
from su21_endoscopy.serializers import (
    complex_pair,
    exception_error,
    generate_error_messages,
    plain,
)


def test_complex_pair():
    """Numbers become [re, im]."""
    assert complex_pair(3) == [3.0, 0.0]
    assert complex_pair(np.complex128(1 - 2j)) == [1.0, -2.0]


def test_plain_converts_nested_values():
    """numpy scalars, tuples and complex numbers become JSON types."""
    value = {
        1: (np.float64(0.5), np.int64(3)),
        "flag": np.bool_(True),
        "z": [1j],
    }
    assert plain(value) == {"1": [0.5, 3], "flag": True, "z": [[0.0, 1.0]]}
    assert type(plain(np.float64(0.5))) is float


def test_generate_error_messages():
    """pydantic errors are flattened to type, loc and msg."""
    try:
        BumpFunction.model_validate({"factors": [{"coord": "re01", "radius": -1}]})
    except ValidationError as e:
        messages = generate_error_messages(e.errors())
    locs = {m["loc"] for m in messages}
    assert "factors.0.center" in locs
    assert "factors.0.radius" in locs
    assert all(set(m) == {"type", "loc", "msg"} for m in messages)


def test_exception_error():
    """Exceptions are reported by class name."""
    error = exception_error(ValueError("bad tolerance"), "orbits")
    assert error == {"type": "ValueError", "loc": "orbits", "msg": "bad tolerance"}
