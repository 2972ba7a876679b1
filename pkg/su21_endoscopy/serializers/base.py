# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Base report serializers."""

import csv
import io
import json
from abc import ABC, abstractmethod
from typing import IO

import marshmallow as ma

from ..config import ENDOSCOPY_REPORT_SCHEMA
from .utils import plain


class ReportSerializer(ABC):
    """Base report serializer class."""

    @abstractmethod
    def dumps(self, report, schema: ma.Schema | None = None) -> str:
        """Serialize a report to text, dumping it through ``schema`` first."""

    def dump(self, report, stream: IO, schema: ma.Schema | None = None) -> None:
        """Write the serialized report to a stream."""
        stream.write(self.dumps(report, schema))


class JSONReportSerializer(ReportSerializer):
    """Schema-versioned JSON reports with sorted keys."""

    def __init__(
        self, schema_version: int = ENDOSCOPY_REPORT_SCHEMA, indent: int | None = 2
    ):
        """Initialize the serializer; ``indent=None`` writes a single line."""
        self.schema_version = schema_version
        self.indent = indent

    def dumps(self, report: dict, schema: ma.Schema | None = None) -> str:
        """``{"schema": <version>, ...}`` through ``json.dumps(sort_keys=True)``."""
        data = schema.dump(report) if schema is not None else report
        payload = {"schema": self.schema_version, **plain(data)}
        return json.dumps(payload, sort_keys=True, indent=self.indent) + "\n"

    def loads(self, text: str, schema: ma.Schema) -> dict:
        """Parse a report and validate it against ``schema``.

        Raises:
            marshmallow.ValidationError: if the report does not match.
        """
        data = json.loads(text)
        version = data.pop("schema", None)
        if version != self.schema_version:
            raise ma.ValidationError(
                f"Unsupported report schema {version!r}.", field_name="schema"
            )
        return schema.load(data)


class CSVReportSerializer(ReportSerializer):
    """Flat tables for grid data, written with ``DictWriter``."""

    def dumps(self, report: list[dict], schema: ma.Schema | None = None) -> str:
        """One row per dict; the columns follow the first row."""
        rows = schema.dump(report, many=True) if schema is not None else report
        stream = io.StringIO()
        if not rows:
            return ""
        writer = csv.DictWriter(stream, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(plain(row))
        return stream.getvalue()

    def load(self, stream: IO) -> list[dict]:
        """Read rows back with ``DictReader``, dropping empty cells."""
        return [
            {k: v for k, v in row.items() if v != ""} for row in csv.DictReader(stream)
        ]
