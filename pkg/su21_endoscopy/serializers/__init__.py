# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Report serializers."""

from .base import CSVReportSerializer, JSONReportSerializer, ReportSerializer
from .utils import complex_pair, exception_error, generate_error_messages, plain

__all__ = (
    "CSVReportSerializer",
    "JSONReportSerializer",
    "ReportSerializer",
    "complex_pair",
    "exception_error",
    "generate_error_messages",
    "plain",
)
