# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Helpers shared by the report serializers."""

import numpy as np


def generate_error_messages(errors: list) -> list[dict]:
    """Generate error messages from a list of errors.

    Args:
        errors (list): A list of pydantic error dicts.
    Returns:
        list: Dicts with type, loc and msg keys.
    """
    error_messages = []
    for error in errors:
        error_messages.append(
            dict(
                type=error["type"],
                loc=".".join(str(item) for item in error["loc"]),
                msg=error["msg"],
            )
        )
    return error_messages


def exception_error(exc: Exception, loc: str) -> dict:
    """Error dict for an exception raised while running a check."""
    return dict(type=type(exc).__name__, loc=loc, msg=str(exc))


def complex_pair(value) -> list[float]:
    """[re, im] of a number."""
    value = complex(value)
    return [float(value.real), float(value.imag)]


def plain(value):
    """Recursively convert numpy scalars, tuples and complex numbers to JSON types."""
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, (complex, np.complexfloating)):
        return complex_pair(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value
