# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Command-line interface.

Exit codes: 0 when everything passed, 1 on a failed verification or a
computation error, 2 on a usage error.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction

import numpy as np
from pydantic import ValidationError

from .algebra import audit_basis
from .endoscopy import (
    LOCKED_CONVENTIONS,
    EllipticElement,
    KappaCharacter,
    LPacket,
    calibrate_conventions,
    default_xi,
    klein_four_table,
    packet_report,
    pairing_inversion_check,
    regular_grid,
    transfer_identity_check,
    two_element_table,
)
from .errors import WorkbenchError
from .functions import BumpFunction
from .orbits import BFunctional, PolarizationSign, classify_orbit, is_polarization
from .quadrature import DiagonalGamma, elliptic_orbital_quadrature, singular_fit
from .roots import Weight, enumerate_parameters
from .serializers import CSVReportSerializer, JSONReportSerializer
from .serializers.schemas import (
    AuditReportSchema,
    EnumerationRowSchema,
    InversionReportSchema,
    OrbitRecordSchema,
    PacketReportSchema,
    QuadratureResultSchema,
    SingularFitSchema,
    SuiteSummarySchema,
    TransferReportSchema,
)
from .serializers.utils import exception_error, generate_error_messages
from .settings import RunConfig
from .suites import SUITES, exit_code, run_suites
from .suites.quadrature import ANCHOR_RTOL

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLES = {"two": two_element_table, "klein": klein_four_table}

KAPPAS = {"reference": KappaCharacter.reference, "trivial": KappaCharacter.trivial}

TOL_HELP = "defaults to the tolerance in the run configuration"


class UsageError(Exception):
    """Invalid arguments detected after parsing."""

    def __init__(self, errors: list[dict]):
        """Initialize the error with its error dicts."""
        super().__init__("; ".join(f"{e['loc']}: {e['msg']}" for e in errors))
        self.errors = errors


def _floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _weight(text: str) -> Weight:
    try:
        return Weight.parse(text)
    except (TypeError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _override(text: str) -> tuple[str, object]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"Expected NAME=VALUE, got {text!r}.")
    try:
        return key.strip(), json.loads(value)
    except json.JSONDecodeError:
        return key.strip(), value


def _config(args) -> RunConfig:
    config, errors = RunConfig.from_overrides(**dict(args.overrides))
    if errors:
        raise UsageError(errors)
    return config


def _tol(args, default: float) -> float:
    return default if args.tol is None else args.tol


def _bump(args, default: BumpFunction) -> BumpFunction:
    if args.bump is None:
        return default
    try:
        return BumpFunction.model_validate_json(args.bump)
    except ValidationError as e:
        raise UsageError(generate_error_messages(e.errors()))


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as stream:
            stream.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(args, rows: list[dict], schema=None) -> None:
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as stream:
            CSVReportSerializer().dump(rows, stream, schema)


def cmd_audit_basis(args) -> int:
    """Audit the printed generators; exit 0 when the corrected relations hold."""
    report = audit_basis(exact=args.exact)
    _emit(args, JSONReportSerializer().dumps(report, AuditReportSchema()))
    return EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_classify_orbit(args) -> int:
    """Classify one functional and test both polarizations at it."""
    functional = BFunctional(args.t, args.x, args.y, args.z)
    orbit = classify_orbit(functional, _tol(args, _config(args).orbit_tol))
    record = {
        "t": functional.t,
        "x": functional.x,
        "y": functional.y,
        "z": functional.z,
        "class": orbit.name,
        "alpha": orbit.alpha,
        "polarizations": {
            sign.value: is_polarization(sign, functional) for sign in PolarizationSign
        },
    }
    serializer = JSONReportSerializer(indent=None)
    _emit(args, serializer.dumps(record, OrbitRecordSchema()))
    return EXIT_OK


def cmd_orbital_elliptic(args) -> int:
    """Elliptic orbital integral of a bump at diag(a1, a2, a3)."""
    config = _config(args)
    f = _bump(args, config.reference_elliptic_bump)
    try:
        gamma = DiagonalGamma(args.a1, args.a2, args.a3)
    except ValueError as e:
        raise UsageError([exception_error(e, "gamma")])
    result = elliptic_orbital_quadrature(gamma, f, _tol(args, config.quad_tol))
    _emit(args, JSONReportSerializer().dumps(result, QuadratureResultSchema()))
    return EXIT_OK if result.converged else EXIT_FAILED


def cmd_orbital_theta(args) -> int:
    """Singular fit of the theta-case integral along a lambda grid."""
    config = _config(args)
    f = _bump(args, config.reference_theta_bump)
    try:
        fit = singular_fit(
            f, args.lambda_grid, _tol(args, config.quad_tol), config.condition_limit
        )
    except ValueError as e:
        raise UsageError([exception_error(e, "lambda_grid")])
    _emit(args, JSONReportSerializer().dumps(fit, SingularFitSchema()))
    if fit.growth or fit.a_term_deviation > ANCHOR_RTOL:
        return EXIT_FAILED
    return EXIT_OK


def _transfer_rows(report: dict) -> list[dict]:
    rows = []
    for row in report["grid"]:
        theta1, theta2, theta3 = row["angles"]
        rows.append(
            dict(
                theta1=theta1,
                theta2=theta2,
                theta3=theta3,
                w=row["w"],
                lhs_re=row["lhs"].real,
                lhs_im=row["lhs"].imag,
                rhs_re=row["rhs"].real,
                rhs_im=row["rhs"].imag,
                residual=row["residual"],
            )
        )
    return rows


def cmd_transfer_check(args) -> int:
    """Evaluate the transfer identity on a seeded regular grid."""
    config = _config(args)
    mu = args.mu or Weight.of(*config.reference_mu)
    xi = args.xi or default_xi()
    rng = np.random.default_rng(config.seed)
    manifest = None
    conventions = LOCKED_CONVENTIONS
    if args.calibrate:
        calibration = regular_grid(rng, config.calibration_grid, config.grid_margin)
        manifest = calibrate_conventions(mu, xi, calibration)
        conventions = manifest.winner
    grid = regular_grid(rng, args.grid_n or config.transfer_grid, config.grid_margin)
    report = transfer_identity_check(mu, xi, grid, conventions)
    payload = report.to_dict()
    payload["calibration"] = manifest.to_dict() if manifest else None
    _emit(args, JSONReportSerializer().dumps(payload, TransferReportSchema()))
    _emit_csv(args, _transfer_rows(payload))
    return EXIT_OK if report.max_residual <= config.transfer_tol else EXIT_FAILED


def cmd_packet(args) -> int:
    """Members of the L-packet of mu and its sums at one angle triple."""
    config = _config(args)
    mu = args.mu or Weight.of(*config.reference_mu)
    try:
        gamma = EllipticElement(tuple(args.angles))
    except ValueError as e:
        raise UsageError([exception_error(e, "angles")])
    report = packet_report(LPacket(mu), gamma, KAPPAS[args.kappa]())
    _emit(args, JSONReportSerializer().dumps(report, PacketReportSchema()))
    _emit_csv(
        args,
        [
            {k: v for k, v in member.items() if k != "character"}
            for member in report["members"]
        ],
    )
    return EXIT_OK


def cmd_inversion_check(args) -> int:
    """Recover traces from endoscopic sums with a built-in pairing table."""
    table = TABLES[args.table]()
    normalization = None
    if args.normalization is not None:
        if len(args.normalization) != table.size:
            raise UsageError(
                [dict(type="value_error", loc="normalization", msg="wrong length")]
            )
        normalization = dict(zip(table.endoscopic, args.normalization))
    try:
        result = pairing_inversion_check(table, args.sigma, normalization)
    except ValueError as e:
        raise UsageError([exception_error(e, "sigma")])
    _emit(args, JSONReportSerializer().dumps(result.to_dict(), InversionReportSchema()))
    return EXIT_OK if result.exact else EXIT_FAILED


def cmd_parameters(args) -> int:
    """Enumerate Harish-Chandra parameters up to a bound."""
    config = _config(args)
    bound = args.bound or config.enumeration_bound
    rows = [record.to_row() for record in enumerate_parameters(bound)]
    schema = EnumerationRowSchema(many=True)
    _emit(args, JSONReportSerializer().dumps({"rows": schema.dump(rows)}))
    _emit_csv(args, rows, EnumerationRowSchema())
    return EXIT_OK


def _check_rows(summary: dict) -> list[dict]:
    return [
        dict(
            suite=suite["name"],
            check=check["name"],
            passed=check["passed"],
            residual=check["residual"],
        )
        for suite in summary["suites"]
        for check in suite["checks"]
    ]


def cmd_verify_all(args) -> int:
    """Run the verification suites and summarise them."""
    config = _config(args)
    try:
        summary = run_suites(config, args.suite)
    except WorkbenchError as e:
        raise UsageError([exception_error(e, "suite")])
    _emit(args, JSONReportSerializer().dumps(summary, SuiteSummarySchema()))
    _emit_csv(args, _check_rows(summary))
    return exit_code(summary["state"])


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per verification entry point."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
    )
    common.add_argument("--out", help="write the JSON report to this path")
    common.add_argument("--csv", help="write grid data as CSV to this path")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        type=_override,
        default=[],
        metavar="NAME=VALUE",
        help="override a run configuration value",
    )

    parser = argparse.ArgumentParser(
        prog="su21-endoscopy",
        description="Verification workbench for endoscopy on SU(2,1).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    audit = commands.add_parser("audit-basis", parents=[common])
    audit.add_argument("--exact", action="store_true")
    audit.set_defaults(handler=cmd_audit_basis)

    orbit = commands.add_parser("classify-orbit", parents=[common])
    for name in ("t", "x", "y", "z"):
        orbit.add_argument(f"--{name}", type=float, default=0.0)
    orbit.add_argument("--tol", type=float, help=TOL_HELP)
    orbit.set_defaults(handler=cmd_classify_orbit)

    orbital = commands.add_parser("orbital").add_subparsers(
        dest="case", required=True
    )
    elliptic = orbital.add_parser("elliptic", parents=[common])
    for name in ("a1", "a2", "a3"):
        elliptic.add_argument(f"--{name}", type=float, required=True)
    elliptic.add_argument("--bump", help="bump function as JSON")
    elliptic.add_argument("--tol", type=float, help=TOL_HELP)
    elliptic.set_defaults(handler=cmd_orbital_elliptic)
    theta = orbital.add_parser("theta", parents=[common])
    theta.add_argument("--lambda-grid", type=_floats, required=True)
    theta.add_argument("--bump", help="bump function as JSON")
    theta.add_argument("--tol", type=float, help=TOL_HELP)
    theta.set_defaults(handler=cmd_orbital_theta)

    transfer = commands.add_parser("transfer-check", parents=[common])
    transfer.add_argument("--mu", type=_weight)
    transfer.add_argument("--xi", type=_weight)
    transfer.add_argument("--grid-n", type=int)
    transfer.add_argument("--calibrate", action="store_true")
    transfer.set_defaults(handler=cmd_transfer_check)

    packet = commands.add_parser("packet", parents=[common])
    packet.add_argument("--mu", type=_weight)
    packet.add_argument("--angles", type=_floats, required=True)
    packet.add_argument("--kappa", choices=sorted(KAPPAS), default="reference")
    packet.set_defaults(handler=cmd_packet)

    inversion = commands.add_parser("inversion-check", parents=[common])
    inversion.add_argument("--table", choices=sorted(TABLES), default="two")
    inversion.add_argument("--sigma", type=_fractions, required=True)
    inversion.add_argument("--normalization", type=_fractions)
    inversion.set_defaults(handler=cmd_inversion_check)

    parameters = commands.add_parser("parameters", parents=[common])
    parameters.add_argument("--bound", type=int)
    parameters.set_defaults(handler=cmd_parameters)

    verify = commands.add_parser("verify-all", parents=[common])
    verify.add_argument("--suite", action="append", choices=list(SUITES))
    verify.set_defaults(handler=cmd_verify_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Entry point of the ``su21-endoscopy`` script."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except UsageError as e:
        sys.stderr.write(json.dumps({"errors": e.errors}) + "\n")
        return EXIT_USAGE
    except WorkbenchError as e:
        logger.error("%s", e)
        error = exception_error(e, args.command)
        sys.stderr.write(json.dumps({"errors": [error]}) + "\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
