# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""The theta-case integral F(lambda), its singular expansion and parity functions."""

import logging
import warnings
from dataclasses import dataclass, field
from math import inf

import numpy as np
from scipy import integrate, stats

from ..errors import (
    IllConditionedFitError,
    LambdaOutOfRangeError,
    SupportUnboundedError,
)
from ..functions import BumpFunction, Coordinate
from .cubature import ZERO_RESULT, QuadratureResult

logger = logging.getLogger(__name__)

QUAD_LIMIT = 200
QUAD_EPSREL = 1e-12

FIT_BASIS = ("inv", "log", "const")
"""Columns |lambda|^-1, ln(1/|lambda|) and 1 of the singular expansion."""

EXTRA_TERMS = {
    "lambda": lambda a: a,
    "lambda_log": lambda a: a * np.log(1 / a),
}
"""Optional further columns of the singular fit, as functions of |lambda|."""


def theta_matrix(lam: float, t):
    """[[c, t lam, 0], [-lam / t, c, 0], [0, 0, 1]] with c = sqrt(1 - lam^2)."""
    t = np.asarray(t, dtype=float)
    c = np.sqrt(1 - lam**2)
    matrices = np.zeros(t.shape + (3, 3))
    matrices[..., 0, 0] = c
    matrices[..., 1, 1] = c
    matrices[..., 0, 1] = t * lam
    matrices[..., 1, 0] = -lam / t
    matrices[..., 2, 2] = 1.0
    return matrices


def _check_lambda(lam: float) -> None:
    if not 0 < abs(lam) <= 1:
        raise LambdaOutOfRangeError(f"lambda = {lam} is outside 0 < |lambda| <= 1.")


def _intersect(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    return max(a[0], b[0]), min(a[1], b[1])


def _entry_window(lam: float, coord: Coordinate, lo: float, hi: float):
    """t-interval on which a t-dependent entry lies in [lo, hi]."""
    if coord is Coordinate.T:
        return lo, hi
    if coord is Coordinate.RE01:
        # t lam in [lo, hi]
        ends = sorted((lo / lam, hi / lam))
        return ends[0], ends[1]
    # coord is RE10: -lam / t in [lo, hi], monotone in t > 0
    if lam > 0:
        if lo >= 0:
            return inf, -inf
        return -lam / lo, (-lam / hi if hi < 0 else inf)
    if hi <= 0:
        return inf, -inf
    return -lam / hi, (-lam / lo if lo > 0 else inf)


def theta_support(f: BumpFunction, lam: float) -> tuple[float, float]:
    """Interval of t > 0 outside which f(matrix(lam, t)) vanishes.

    Raises:
        SupportUnboundedError: if no factor bounds t from above.
    """
    window = (0.0, inf)
    for coord in (Coordinate.T, Coordinate.RE01, Coordinate.RE10):
        interval = f.support_interval(coord)
        if interval is not None:
            window = _intersect(window, _entry_window(lam, coord, *interval))
    if window[0] < window[1] and window[1] == inf:
        raise SupportUnboundedError(f"Support in t is unbounded at lambda = {lam}.")
    return window


def _quad(
    func, a: float, b: float, tol: float, points=()
) -> tuple[float, float, int, bool]:
    inner = [p for p in points if a < p < b]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, error, info, *_ = integrate.quad(
            func,
            a,
            b,
            epsabs=tol,
            epsrel=QUAD_EPSREL,
            limit=QUAD_LIMIT,
            points=inner or None,
            full_output=1,
        )
    if caught:
        logger.debug("quad on [%g, %g]: %s", a, b, caught[0].message)
    return value, error, info["neval"], not caught


def theta_orbital_F(f: BumpFunction, lam: float, tol: float) -> QuadratureResult:
    """F(lambda) = integral over t > 0 of sign(t - 1) f(matrix(lambda, t)) dt.

    The integral is split at t = 1 and computed in the variable s = ln t, with
    breakpoints at t = |lambda| and t = 1/|lambda|.

    Raises:
        LambdaOutOfRangeError: unless 0 < |lambda| <= 1.
        SupportUnboundedError: if f does not bound t from above.
    """
    _check_lambda(lam)
    lo, hi = theta_support(f, lam)
    if lo >= hi:
        return ZERO_RESULT
    params = {"lambda": lam}

    def in_t(t):
        return f.evaluate(theta_matrix(lam, t), {**params, "t": t})

    def in_log_t(s):
        t = np.exp(s)
        return t * in_t(t)

    breaks = (abs(lam), 1 / abs(lam))
    value = error = 0.0
    evaluations = 0
    converged = True
    for sign, a, b in ((-1.0, lo, min(hi, 1.0)), (1.0, max(lo, 1.0), hi)):
        if a >= b:
            continue
        if a > 0:
            piece = _quad(
                in_log_t, np.log(a), np.log(b), tol / 2, [np.log(p) for p in breaks]
            )
        else:
            piece = _quad(in_t, a, b, tol / 2, breaks)
        value += sign * piece[0]
        error += piece[1]
        evaluations += piece[2]
        converged = converged and piece[3]
    return QuadratureResult(value, error, evaluations, converged)


def unipotent_integral(f: BumpFunction, sign: float, tol: float) -> QuadratureResult:
    """A-term: integral over u > 0 of f(n(sign u)), n(u) = I + u E12.

    Raises:
        SupportUnboundedError: if f has no factor on the (1, 2) entry.
    """
    if f.coordinates & {Coordinate.T, Coordinate.LAMBDA}:
        raise ValueError("The unipotent limit is defined for matrix coordinates only.")
    interval = f.support_interval(Coordinate.RE01)
    if interval is None:
        raise SupportUnboundedError("No factor bounds the unipotent coordinate.")
    lo, hi = sorted((sign * interval[0], sign * interval[1]))
    lo, hi = max(lo, 0.0), hi
    if lo >= hi:
        return ZERO_RESULT

    def integrand(u):
        n = np.eye(3)
        n[0, 1] = sign * u
        return f.evaluate(n)

    value, error, evaluations, converged = _quad(integrand, lo, hi, tol)
    return QuadratureResult(value, error, evaluations, converged)


def dyadic_sequence(k_start: int, k_stop: int, sign: float = 1.0) -> list[float]:
    """lambda = sign * 2**-k for k = k_start .. k_stop."""
    return [sign * 2.0**-k for k in range(k_start, k_stop + 1)]


def _check_sequence(lambdas: list[float], minimum: int) -> None:
    magnitudes = [abs(lam) for lam in lambdas]
    if len(lambdas) < minimum:
        raise ValueError(f"Need at least {minimum} values of lambda.")
    if any(b >= a for a, b in zip(magnitudes, magnitudes[1:])):
        raise ValueError("|lambda| must be strictly decreasing.")
    if len({np.sign(lam) for lam in lambdas}) != 1:
        raise ValueError("All lambda must have the same sign.")
    for lam in lambdas:
        _check_lambda(lam)


def _least_squares(design: np.ndarray, values: np.ndarray, limit: float):
    condition = float(np.linalg.cond(design))
    if not np.isfinite(condition) or condition > limit:
        raise IllConditionedFitError(
            f"Design matrix condition number {condition:.3g} exceeds {limit:.3g}."
        )
    if condition > limit / 100:
        logger.warning(
            "Design matrix is close to the conditioning guard (%.3g).", condition
        )
    coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
    return coefficients, condition


def _relative_deviation(value: float, reference: float) -> float:
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


@dataclass(frozen=True)
class SingularFit:
    """Fit of F(lambda) against |lambda|^-1, ln(1/|lambda|) and 1."""

    c_inv: float
    c_log: float
    c_0: float
    residual_max: float
    a_term: float
    a_term_deviation: float
    condition_number: float
    trend_slope: float
    trend_pvalue: float
    lambdas: list[float] = field(default_factory=list)
    values: list[float] = field(default_factory=list)
    extra: dict[str, float] = field(default_factory=dict)

    @property
    def growth(self) -> bool:
        """Whether the post-fit remainder grows as lambda -> 0 at 95% confidence."""
        return self.trend_slope > 0 and self.trend_pvalue < 0.05


def singular_fit(
    f: BumpFunction,
    lambdas: list[float],
    tol: float,
    condition_limit: float = 1e8,
    extra_terms: tuple[str, ...] = (),
) -> SingularFit:
    """Least-squares expansion of F near lambda = 0, anchored by the A-term.

    Raises:
        IllConditionedFitError: if the design matrix exceeds ``condition_limit``.
    """
    _check_sequence(lambdas, 8)
    magnitudes = np.abs(np.asarray(lambdas, dtype=float))
    values = np.array([theta_orbital_F(f, lam, tol).value for lam in lambdas])
    columns = [1 / magnitudes, np.log(1 / magnitudes), np.ones_like(magnitudes)]
    columns += [EXTRA_TERMS[name](magnitudes) for name in extra_terms]
    design = np.stack(columns, axis=1)
    coefficients, condition = _least_squares(design, values, condition_limit)
    residual = values - design @ coefficients

    c_inv, c_log, c_0 = (float(c) for c in coefficients[:3])
    remainder = values - c_inv / magnitudes - c_log * np.log(1 / magnitudes)
    if np.ptp(remainder) == 0:
        slope, pvalue = 0.0, 1.0
    else:
        trend = stats.linregress(np.log2(1 / magnitudes), np.abs(remainder))
        slope, pvalue = float(trend.slope), float(trend.pvalue)

    a_term = unipotent_integral(f, float(np.sign(lambdas[0])), tol).value
    return SingularFit(
        c_inv=c_inv,
        c_log=c_log,
        c_0=c_0,
        residual_max=float(np.max(np.abs(residual))),
        a_term=a_term,
        a_term_deviation=_relative_deviation(c_inv, a_term),
        condition_number=condition,
        trend_slope=slope,
        trend_pvalue=pvalue,
        lambdas=[float(lam) for lam in lambdas],
        values=[float(v) for v in values],
        extra={
            name: float(c) for name, c in zip(extra_terms, coefficients[3:])
        },
    )


def parity_functions(f: BumpFunction, lam: float, tol: float) -> tuple[float, float]:
    """G = |lambda|(F(lambda) + F(-lambda)) and H = lambda(F(lambda) - F(-lambda)).

    Both are computed from |lambda| so that G and H are even to the last bit.
    """
    _check_lambda(lam)
    a = abs(lam)
    plus = theta_orbital_F(f, a, tol).value
    minus = theta_orbital_F(f, -a, tol).value
    return a * (plus + minus), a * (plus - minus)


@dataclass(frozen=True)
class ParityFit:
    """Fit of G on |lambda|^-1, 1 and |lambda| against the two one-sided A-terms."""

    a_0: float
    b_0: float
    b_1: float
    residual_max: float
    anchor: float
    anchor_deviation: float
    h_limit: float
    h_anchor: float


def parity_fit(
    f: BumpFunction, lambdas: list[float], tol: float, condition_limit: float = 1e8
) -> ParityFit:
    """Expansion of the parity functions; b_0 should equal A(+) + A(-)."""
    _check_sequence(lambdas, 4)
    magnitudes = np.abs(np.asarray(lambdas, dtype=float))
    pairs = [parity_functions(f, lam, tol) for lam in magnitudes]
    g_values = np.array([g for g, _ in pairs])
    design = np.stack(
        [1 / magnitudes, np.ones_like(magnitudes), magnitudes], axis=1
    )
    coefficients, _ = _least_squares(design, g_values, condition_limit)
    a_plus = unipotent_integral(f, 1.0, tol).value
    a_minus = unipotent_integral(f, -1.0, tol).value
    anchor = a_plus + a_minus
    return ParityFit(
        a_0=float(coefficients[0]),
        b_0=float(coefficients[1]),
        b_1=float(coefficients[2]),
        residual_max=float(np.max(np.abs(g_values - design @ coefficients))),
        anchor=anchor,
        anchor_deviation=_relative_deviation(float(coefficients[1]), anchor),
        h_limit=float(pairs[-1][1]),
        h_anchor=a_plus - a_minus,
    )


def theta_jacobian(theta: float) -> complex:
    """Delta at the compact rotation k(theta) of H, equal to -2i sin(theta)."""
    return -2j * np.sin(theta)


def theta_transfer_fH(f: BumpFunction, theta: float, tol: float) -> complex:
    """f^H(k(theta)) = -2i H(sin theta), with H(l) = |l| (F(|l|) - F(-|l|))."""
    lam = float(np.sin(theta))
    _check_lambda(lam)
    _, h = parity_functions(f, lam, tol)
    return -2j * h
