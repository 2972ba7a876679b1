# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Report schemas."""

import marshmallow as ma

from .utils import complex_pair


class ComplexPair(ma.fields.Field):
    """A complex number written as [re, im]."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return complex_pair(value)

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ma.ValidationError("Expected a [re, im] pair.")
        try:
            return complex(float(value[0]), float(value[1]))
        except (TypeError, ValueError) as e:
            raise ma.ValidationError(str(e))


class ErrorSchema(ma.Schema):
    """Error entry."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    type = ma.fields.Str(required=True)
    loc = ma.fields.Str(required=True)
    msg = ma.fields.Str(required=True)


class BracketRowSchema(ma.Schema):
    """Expansion of one bracket in the corrected basis."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    other = ma.fields.Str(required=True)
    coefficients = ma.fields.Dict(
        keys=ma.fields.Str(), values=ma.fields.Str(), allow_none=True
    )


class GeneratorAuditSchema(ma.Schema):
    """Membership verdict of one printed generator."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    name = ma.fields.Str(required=True)
    member = ma.fields.Bool(required=True)
    i_twist_member = ma.fields.Bool(required=True)
    corrected_label = ma.fields.Str(required=True)
    bracket_rows = ma.fields.List(ma.fields.Nested(BracketRowSchema))


class IdentityAuditSchema(ma.Schema):
    """Verdict of one bracket relation in both readings."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    identity = ma.fields.Str(required=True)
    printed_holds = ma.fields.Bool(required=True)
    corrected_holds = ma.fields.Bool(required=True)


class AuditReportSchema(ma.Schema):
    """Basis audit."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    mode = ma.fields.Str(required=True)
    generators = ma.fields.List(ma.fields.Nested(GeneratorAuditSchema))
    identities = ma.fields.List(ma.fields.Nested(IdentityAuditSchema))
    corrected_basis = ma.fields.Dict(
        keys=ma.fields.Str(),
        values=ma.fields.List(ma.fields.List(ma.fields.Str())),
    )
    errata = ma.fields.List(ma.fields.Str())
    passed = ma.fields.Bool(required=True)


class OrbitRecordSchema(ma.Schema):
    """Classification of one functional on the Borel algebra."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    t = ma.fields.Float(required=True)
    x = ma.fields.Float(required=True)
    y = ma.fields.Float(required=True)
    z = ma.fields.Float(required=True)
    kind = ma.fields.Str(required=True, data_key="class", attribute="class")
    alpha = ma.fields.Float(allow_none=True)
    polarizations = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Bool())


class QuadratureResultSchema(ma.Schema):
    """Value of an orbital integral with its error estimate."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    value = ma.fields.Float(required=True)
    error_estimate = ma.fields.Float(required=True)
    evaluations = ma.fields.Int(required=True)
    converged = ma.fields.Bool(required=True)


class SingularFitSchema(ma.Schema):
    """Singular expansion of the theta-case integral."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    c_inv = ma.fields.Float(required=True)
    c_log = ma.fields.Float(required=True)
    c_0 = ma.fields.Float(required=True)
    residual_max = ma.fields.Float(required=True)
    a_term = ma.fields.Float(required=True)
    a_term_deviation = ma.fields.Float(required=True)
    condition_number = ma.fields.Float(required=True)
    trend_slope = ma.fields.Float(required=True)
    trend_pvalue = ma.fields.Float(required=True)
    growth = ma.fields.Bool(required=True)
    lambdas = ma.fields.List(ma.fields.Float())
    values = ma.fields.List(ma.fields.Float())
    extra = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Float())


class TransferRowSchema(ma.Schema):
    """Both sides of the transfer identity at one point."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    angles = ma.fields.List(ma.fields.Float(), required=True)
    w = ma.fields.Str(required=True)
    lhs = ComplexPair(required=True)
    rhs = ComplexPair(required=True)
    residual = ma.fields.Float(required=True)


class TransferReportSchema(ma.Schema):
    """Transfer identity on a grid."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    mu = ma.fields.Str(required=True)
    xi = ma.fields.Str(required=True)
    conventions_manifest = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Str())
    grid = ma.fields.List(ma.fields.Nested(TransferRowSchema))
    max_residual = ma.fields.Float(required=True)
    calibration = ma.fields.Dict(allow_none=True)


class PacketMemberSchema(ma.Schema):
    """One member of an L-packet."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    label = ma.fields.Str(required=True)
    representative = ma.fields.Str(required=True)
    parameter = ma.fields.Str(required=True)
    parameter_class = ma.fields.Str(required=True)
    kappa = ma.fields.Int(required=True)
    character = ComplexPair(required=True)


class KappaReconciliationSchema(ma.Schema):
    """Printed kappa against the kappa in use."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    printed = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Int())
    used = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Int())
    mismatches = ma.fields.List(ma.fields.Str())


class PacketReportSchema(ma.Schema):
    """An L-packet evaluated at one element."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    mu = ma.fields.Str(required=True)
    angles = ma.fields.List(ma.fields.Float(), required=True)
    kappa = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Int())
    kappa_reconciliation = ma.fields.Nested(KappaReconciliationSchema)
    members = ma.fields.List(ma.fields.Nested(PacketMemberSchema))
    stable_sum = ComplexPair(required=True)
    kappa_sum = ComplexPair(required=True)


class InversionReportSchema(ma.Schema):
    """Pairing inversion in rational arithmetic."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    endoscopic = ma.fields.List(ma.fields.Str(), required=True)
    packet = ma.fields.List(ma.fields.Str(), required=True)
    sigma_values = ma.fields.List(ma.fields.Str(), required=True)
    recovered = ma.fields.List(ma.fields.Str(), required=True)
    orthogonal = ma.fields.Bool(required=True)
    exact = ma.fields.Bool(required=True)


class EnumerationRowSchema(ma.Schema):
    """Row of the Harish-Chandra parameter enumeration."""

    class Meta:
        """Reject unknown keys and keep the column order."""

        unknown = ma.RAISE
        ordered = True

    l1 = ma.fields.Str(required=True)
    l2 = ma.fields.Str(required=True)
    l3 = ma.fields.Str(required=True)
    H12 = ma.fields.Str(required=True)
    H21 = ma.fields.Str(required=True)
    H23 = ma.fields.Str(required=True)
    H32 = ma.fields.Str(required=True)
    H13 = ma.fields.Str(required=True)
    H31 = ma.fields.Str(required=True)
    parameter_class = ma.fields.Str(required=True, data_key="class", attribute="class")
    multi_match = ma.fields.Bool(required=True)


class CheckSchema(ma.Schema):
    """One named check of a suite."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    name = ma.fields.Str(required=True)
    passed = ma.fields.Bool(required=True)
    residual = ma.fields.Float(allow_none=True)
    msg = ma.fields.Str(allow_none=True)


class SuiteResultSchema(ma.Schema):
    """Outcome of one verification suite."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    name = ma.fields.Str(required=True)
    state = ma.fields.Str(required=True)
    checks = ma.fields.List(ma.fields.Nested(CheckSchema))
    errors = ma.fields.List(ma.fields.Nested(ErrorSchema))
    payload = ma.fields.Dict()


class SuiteSummarySchema(ma.Schema):
    """Summary of a verify-all run."""

    class Meta:
        """Reject unknown keys."""

        unknown = ma.RAISE

    state = ma.fields.Str(required=True)
    counts = ma.fields.Dict(keys=ma.fields.Str(), values=ma.fields.Int())
    suites = ma.fields.List(ma.fields.Nested(SuiteResultSchema))
    config = ma.fields.Dict()
