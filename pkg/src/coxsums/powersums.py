"""Power sums of exponents and of root heights, by independent methods.

Three routes compute sum(m_i**n): direct summation over the exponents,
the Todd route n! * r * Td_n(gamma_1..gamma_n), and closed forms in
(r, h, gamma, alpha, beta) for n <= 5.  Height power sums use the
exponents only, through sum_i (1**n + ... + m_i**n); actual roots are
never constructed, so the noncrystallographic types evaluate the same
formulas (their CLI output is labeled a formal height sum).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import todd as _todd
from .catalog import (
    CoxeterType,
    ParameterSet,
    dual_partition,
    exponents,
    normalize,
    parameters,
)
from .errors import InternalMismatch, UnsupportedDegree


@dataclass(frozen=True)
class PowerSumResult:
    type: CoxeterType
    n: int
    value: Fraction
    method: str


def _params(t: CoxeterType, params: ParameterSet | None) -> ParameterSet:
    return params if params is not None else parameters(t)


def powersum_direct(t: CoxeterType, n: int) -> PowerSumResult:
    """sum(m_i**n) by direct exponentiation over the exponent list."""
    if n < 0:
        raise ValueError("n must be >= 0")
    exps = exponents(t)
    value = sum((Fraction(m) ** n for m in exps.values), Fraction(0))
    return PowerSumResult(normalize(t), n, value, "direct")


def powersum_todd(
    t: CoxeterType, n: int, p: int = 1, params: ParameterSet | None = None
) -> PowerSumResult:
    """sum(m_i**n) as n! * r * Td_n of the gamma series."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if p < 1:
        raise ValueError("p must be >= 1")
    ps = _params(t, params)
    g = _todd.gamma_series(ps, p, max(n, 2))
    td = _todd.todd_values(g, n)
    value = factorial(n) * ps.r * td.values[n]
    return PowerSumResult(normalize(t), n, value, "todd")


def _r45(ps: ParameterSet) -> Fraction:
    h, g = ps.h, ps.gamma
    s, q = ps.alpha + ps.beta, ps.alpha * ps.beta
    return (h * h - g - h + 2) * ((h - 2 + s) * s - q) + (h - 2) * (h - 2 + s) * q


def powersum_closed(
    t: CoxeterType, n: int, params: ParameterSet | None = None
) -> PowerSumResult:
    """Closed forms for sum(m_i**n), n <= 5."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 5:
        raise UnsupportedDegree(f"no closed power-sum form for n = {n}")
    ps = _params(t, params)
    r, h, g = ps.r, ps.h, ps.gamma
    if n == 0:
        value = Fraction(r)
    elif n == 1:
        value = Fraction(r * h, 2)
    elif n == 2:
        value = Fraction(r, 6) * (h * h + g - h)
    elif n == 3:
        value = Fraction(r, 4) * h * (g - h)
    elif n == 4:
        value = Fraction(r, 30) * (
            -(h**4) + 5 * h * h * g + 2 * g * g - 7 * h**3 - 2 * h * g
            + 4 * h * h - 2 * g - 2 * h + 2 + _r45(ps)
        )
    else:
        value = Fraction(r, 12) * h * (
            2 * g * g - 2 * h**3 - 2 * h * g + 4 * h * h - 2 * g - 2 * h + 2
            + _r45(ps)
        )
    return PowerSumResult(normalize(t), n, value, "closed")


def heightsum_direct(t: CoxeterType, n: int) -> PowerSumResult:
    """sum over positive roots of ht**n, as sum_i faulhaber(n, m_i).

    A second route through the dual partition (k_j roots of height j)
    is computed alongside; any disagreement is a logic bug.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    exps = exponents(t)
    by_faulhaber = sum((_todd.faulhaber(n, m) for m in exps.values), Fraction(0))
    dual = dual_partition(exps)
    by_dual = sum(
        (Fraction(k) * Fraction(j) ** n for j, k in enumerate(dual.counts, start=1)),
        Fraction(0),
    )
    if by_faulhaber != by_dual:
        raise InternalMismatch(
            f"height sum routes disagree for {t}: {by_faulhaber} vs {by_dual}"
        )
    return PowerSumResult(normalize(t), n, by_faulhaber, "direct")


def heightsum_closed(
    t: CoxeterType, n: int, params: ParameterSet | None = None
) -> PowerSumResult:
    """Closed forms for the height power sums, n <= 4."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 4:
        raise UnsupportedDegree(f"no closed height-sum form for n = {n}")
    ps = _params(t, params)
    r, h, g = ps.r, ps.h, ps.gamma
    if n == 0:
        value = Fraction(r * h, 2)
    elif n == 1:
        value = Fraction(r, 12) * (h * h + g + 2 * h)
    elif n == 2:
        value = Fraction(r, 12) * (h + 1) * g
    elif n == 3:
        value = Fraction(r, 120) * (
            -(h**4) + 5 * h * h * g + 2 * g * g - 7 * h**3 + 13 * h * g
            - 6 * h * h + 3 * g - 7 * h + 2 + _r45(ps)
        )
    else:
        value = Fraction(r, 60) * (h + 1) * (
            2 * g * g - 3 * h**3 + 3 * h * g - 2 * g - 3 * h + 2 + _r45(ps)
        )
    return PowerSumResult(normalize(t), n, value, "closed")
