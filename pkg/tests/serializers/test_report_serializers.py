# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""JSON and CSV report serializers."""

import io
import json

import marshmallow as ma
import pytest

from su21_endoscopy.serializers import CSVReportSerializer, JSONReportSerializer
from su21_endoscopy.serializers.schemas import (
    EnumerationRowSchema,
    InversionReportSchema,
    PacketMemberSchema,
)


def test_json_adds_schema_and_sorts_keys():
    """Every report carries the schema version; keys are sorted."""
    text = JSONReportSerializer(indent=None).dumps({"b": 1, "a": 2j})
    assert text == '{"a": [0.0, 2.0], "b": 1, "schema": 1}\n'


def test_json_round_trip(inversion_report):
    """A dumped report loads back through its schema."""
    serializer = JSONReportSerializer()
    text = serializer.dumps(inversion_report, InversionReportSchema())
    assert serializer.loads(text, InversionReportSchema()) == inversion_report


def test_json_rejects_other_schema_versions(inversion_report):
    """Reports written for another schema version are refused."""
    text = JSONReportSerializer(schema_version=2).dumps(inversion_report)
    with pytest.raises(ma.ValidationError):
        JSONReportSerializer().loads(text, InversionReportSchema())


def test_json_rejects_unknown_keys(inversion_report):
    """Schemas raise on unknown fields."""
    serializer = JSONReportSerializer()
    text = serializer.dumps({**inversion_report, "extra": 1})
    with pytest.raises(ma.ValidationError):
        serializer.loads(text, InversionReportSchema())


def test_json_dump_to_stream(inversion_report):
    """dump writes the same text as dumps."""
    serializer = JSONReportSerializer()
    stream = io.StringIO()
    serializer.dump(inversion_report, stream)
    assert json.loads(stream.getvalue())["recovered"] == ["4", "3"]


def test_complex_fields():
    """Complex values are written as [re, im] pairs and read back."""
    member = dict(
        label="pi[w123]",
        representative="w123",
        parameter="(3, 2, -5)",
        parameter_class="not in F0",
        kappa=1,
        character=1.5 - 0.25j,
    )
    dumped = PacketMemberSchema().dump(member)
    assert dumped["character"] == [1.5, -0.25]
    assert PacketMemberSchema().load(dumped)["character"] == 1.5 - 0.25j
    with pytest.raises(ma.ValidationError):
        PacketMemberSchema().load({**dumped, "character": [1.0]})


def test_csv_columns(enumeration_rows):
    """Enumeration tables keep their column order."""
    text = CSVReportSerializer().dumps(enumeration_rows, EnumerationRowSchema())
    header = text.splitlines()[0]
    assert header == "l1,l2,l3,H12,H21,H23,H32,H13,H31,class,multi_match"
    assert len(text.splitlines()) == len(enumeration_rows) + 1


def test_csv_load(enumeration_rows):
    """Rows read back as strings."""
    serializer = CSVReportSerializer()
    rows = serializer.load(io.StringIO(serializer.dumps(enumeration_rows)))
    assert len(rows) == len(enumeration_rows)
    assert rows[0]["class"] == enumeration_rows[0]["class"]
    assert rows[0]["multi_match"] == "False"


def test_csv_drops_empty_cells():
    """Empty cells are left out of the loaded rows."""
    rows = CSVReportSerializer().load(io.StringIO("a,b\n1,\n"))
    assert rows == [{"a": "1"}]


def test_csv_empty_report():
    """No rows, no output."""
    assert CSVReportSerializer().dumps([]) == ""
