# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Verification workbench for endoscopic transfer on SU(2,1)."""

from .settings import RunConfig

__version__ = "0.1.0"

__all__ = ("__version__", "RunConfig")
