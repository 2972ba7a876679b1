# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Command-line interface."""

import json

import pytest

from su21_endoscopy.cli import main

REFERENCE_ANGLES = "1.5707963267948966,0,-1.5707963267948966"


def _report(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_audit_basis(capsys):
    """The audit passes and the report is schema-stamped."""
    assert main(["audit-basis"]) == 0
    report = _report(capsys)
    assert report["schema"] == 1
    assert report["passed"] is True
    assert report["errata"] == ["[T,Y] = -X fails on the printed generators"]


def test_usage_errors():
    """Unknown flags and missing subcommands exit with 2."""
    assert main(["audit-basis", "--nope"]) == 2
    assert main([]) == 2


def test_classify_orbit(capsys):
    """One JSON line per functional."""
    args = ["classify-orbit", "--t", "1", "--x", "2", "--y", "3", "--z", "0.5"]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 1
    record = json.loads(out)
    assert record["class"] == "omega+"
    assert record["polarizations"] == {"plus": True, "minus": True}


def test_classify_cylinder(capsys):
    """Cylinders report alpha."""
    assert main(["classify-orbit", "--x", "1", "--y", "1"]) == 0
    record = _report(capsys)
    assert record["class"] == "cylinder"
    assert record["alpha"] == 1.0


def test_inversion_check(capsys):
    """Traces are recovered as exact rationals."""
    assert main(["inversion-check", "--sigma", "11/2,1/2"]) == 0
    assert _report(capsys)["recovered"] == ["3", "5/2"]


def test_inversion_check_with_normalisation(capsys):
    """Normalisation constants are given per row."""
    args = ["inversion-check", "--sigma", "11/2,-1/4", "--normalization", "1,-1/2"]
    assert main(args) == 0
    assert _report(capsys)["recovered"] == ["3", "5/2"]


def test_inversion_check_wrong_length(capsys):
    """Sigma values must match the table size."""
    assert main(["inversion-check", "--table", "klein", "--sigma", "1,2"]) == 2
    assert "errors" in json.loads(capsys.readouterr().err)


def test_parameters(capsys, tmp_path):
    """Enumeration rows go to JSON and CSV."""
    path = tmp_path / "parameters.csv"
    assert main(["parameters", "--bound", "2", "--csv", str(path)]) == 0
    rows = _report(capsys)["rows"]
    assert len(rows) == 6
    lines = path.read_text().splitlines()
    assert lines[0].startswith("l1,l2,l3,H12")
    assert len(lines) == 7


def test_transfer_check(tmp_path):
    """The transfer identity holds on a small grid."""
    out = tmp_path / "transfer.json"
    args = ["transfer-check", "--grid-n", "4", "--out", str(out)]
    assert main(args) == 0
    report = json.loads(out.read_text())
    assert report["max_residual"] <= 1e-8
    assert len(report["grid"]) == 12
    assert report["calibration"] is None


def test_transfer_check_with_calibration(capsys):
    """Calibration on a small held-out grid reports its winner."""
    args = ["transfer-check", "--grid-n", "2", "--calibrate"]
    assert main(args + ["--set", "calibration_grid=4"]) == 0
    report = _report(capsys)
    assert report["calibration"]["winner"]["denominator_phase"] == "unnormalized"


def test_invalid_override(capsys):
    """Configuration errors exit with 2 and are written to stderr."""
    assert main(["transfer-check", "--set", "seed=-1"]) == 2
    errors = json.loads(capsys.readouterr().err)["errors"]
    assert errors[0]["loc"] == "seed"


def test_packet(capsys):
    """The packet of the reference parameter has three members."""
    assert main(["packet", "--angles", REFERENCE_ANGLES]) == 0
    report = _report(capsys)
    assert len(report["members"]) == 3
    assert report["mu"] == "(3, 2, -5)"
    assert report["kappa_reconciliation"]["mismatches"] == ["H13"]


def test_packet_bad_angles():
    """Angles that do not sum to zero are a usage error."""
    assert main(["packet", "--angles", "0.1,0.2,0.3"]) == 2


def test_packet_irregular_element(capsys):
    """Computation errors exit with 1."""
    assert main(["packet", "--angles", "0.5,0.5,-1"]) == 1
    error = json.loads(capsys.readouterr().err)["errors"][0]
    assert error["type"] == "IrregularElementError"


def test_orbital_elliptic_degenerate(capsys):
    """A repeated eigenvalue is a computation error."""
    assert main(["orbital", "elliptic", "--a1", "1", "--a2", "1", "--a3", "1"]) == 1
    assert "DegenerateGammaError" in capsys.readouterr().err


def test_orbital_elliptic_bad_gamma():
    """Entries that do not multiply to one are a usage error."""
    assert main(["orbital", "elliptic", "--a1", "2", "--a2", "1", "--a3", "1"]) == 2


def test_orbital_theta_short_grid(capsys):
    """The singular fit needs eight lambda values."""
    assert main(["orbital", "theta", "--lambda-grid", "0.5,0.25"]) == 2
    assert "lambda_grid" in capsys.readouterr().err


ELLIPTIC_ARGS = ["orbital", "elliptic", "--a1", "2", "--a2", "1", "--a3", "0.5"]

DYADIC_GRID = ",".join(str(2.0**-k) for k in range(3, 11))


def test_orbital_elliptic_uses_run_configuration(capsys):
    """Overrides reach the elliptic integral and invalid ones are usage errors."""
    assert main(ELLIPTIC_ARGS + ["--set", "seed=-1"]) == 2
    assert "seed" in capsys.readouterr().err
    assert main(ELLIPTIC_ARGS) == 0
    default = _report(capsys)
    assert main(ELLIPTIC_ARGS + ["--set", "quad_tol=1e-4"]) == 0
    loose = _report(capsys)
    assert default["error_estimate"] <= 1e-9
    assert loose["error_estimate"] <= 1e-4
    assert loose["evaluations"] < default["evaluations"]
    assert loose["value"] == pytest.approx(default["value"], abs=1e-4)


def test_orbital_elliptic_tol_flag_wins_over_configuration(capsys):
    """An explicit --tol is used instead of quad_tol."""
    args = ELLIPTIC_ARGS + ["--set", "quad_tol=1e-4", "--tol", "1e-9"]
    assert main(args) == 0
    assert _report(capsys)["error_estimate"] <= 1e-9


def test_orbital_theta_exit_codes(capsys, monkeypatch):
    """A passing fit exits 0; a missed anchor or a conditioning failure exits 1."""
    args = ["orbital", "theta", "--lambda-grid", DYADIC_GRID]
    assert main(args) == 0
    fit = _report(capsys)
    assert fit["a_term_deviation"] <= 0.05
    assert main(args + ["--set", "condition_limit=1.0"]) == 1
    assert "IllConditionedFitError" in capsys.readouterr().err
    monkeypatch.setattr("su21_endoscopy.cli.ANCHOR_RTOL", -1.0)
    assert main(args) == 1


def test_verify_all(capsys):
    """verify-all runs the selected suites and summarises them."""
    assert main(["verify-all", "--suite", "audit", "--suite", "inversion"]) == 0
    summary = _report(capsys)
    assert summary["state"] == "passed"
    assert [s["name"] for s in summary["suites"]] == ["audit", "inversion"]
