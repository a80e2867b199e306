"""Todd polynomial values, gamma series, Bernoulli polynomials, Faulhaber sums.

The gamma series of a parameter set is

    prod(1 - v*t, v in V-) / prod(1 - v*t, v in V+) * ((1+p*t)/(1-p*t))**(1/p)

for a free positive integer p; its coefficients gamma_n feed the Todd
polynomials.  Td_n is evaluated for arbitrary n without symbolic roots:
Newton's identities turn the gamma_n (elementary symmetric functions of
virtual roots x_j) into power sums P_k, and

    sum_n Td_n t**n = exp(sum_k lambda_k P_k t**k)

where lambda_k is the t**k coefficient of log(t / (1 - exp(-t))).

Sign conventions, fixed once here: the Todd factor t/(1-exp(-t)) has
linear coefficient +1/2 (the B_1 = +1/2 orientation), while the
Bernoulli polynomials B_n(x) below use the classical B_1 = -1/2, as
Faulhaber's formula expects.  Both are generated exactly from factorial
series; neither is hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .catalog import ParameterSet
from .errors import ConstraintViolated, UnsupportedDegree
from .series import TruncatedSeries

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class GammaSeries:
    """Gamma coefficients (gamma_0 = 1, gamma_1, ...) plus the p used."""

    series: TruncatedSeries
    p: int

    def __post_init__(self):
        if self.series[0] != 1:
            raise ValueError("gamma series must start with 1")


@dataclass(frozen=True)
class ToddValues:
    """Td_0, Td_1(gamma_1), Td_2(gamma_1, gamma_2), ..."""

    values: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def p_factor(p: int, order: int) -> TruncatedSeries:
    """Expansion of ((1+p*t)/(1-p*t))**(1/p)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    num = TruncatedSeries([1, p], order=order)
    den = TruncatedSeries([1, -p], order=order)
    return (num * den.inverse()).pow(Fraction(1, p))


def p_factor_general(
    pairs: Iterable[tuple[Rational, Rational]], m1: int, order: int
) -> TruncatedSeries:
    """Product of ((1+pi*t)/(1-pi*t))**mu over (pi, mu) pairs.

    The weights must satisfy sum(pi * mu) = m1, which pins the linear
    coefficient of the result to 2*m1.
    """
    pairs = [(Fraction(pi), Fraction(mu)) for pi, mu in pairs]
    weight = sum((pi * mu for pi, mu in pairs), Fraction(0))
    if weight != m1:
        raise ConstraintViolated(f"sum(pi*mu) = {weight}, expected {m1}")
    out = TruncatedSeries.constant(1, order)
    for pi, mu in pairs:
        num = TruncatedSeries([1, pi], order=order)
        den = TruncatedSeries([1, -pi], order=order)
        out = out * (num * den.inverse()).pow(mu)
    return out


@lru_cache(maxsize=None)
def gamma_series(params: ParameterSet, p: int, order: int) -> GammaSeries:
    """Gamma series of a parameter set, from its V+/V- multisets."""
    if order < 2:
        raise ValueError("order must be >= 2")
    num = TruncatedSeries.constant(1, order)
    for v in params.V_minus:
        num = num * TruncatedSeries([1, -v], order=order)
    den = TruncatedSeries.constant(1, order)
    for v in params.V_plus:
        den = den * TruncatedSeries([1, -v], order=order)
    series = num * den.inverse() * p_factor(p, order)
    return GammaSeries(series, p)


def x_sequence(params: ParameterSet, n_max: int) -> list[Fraction]:
    """X_n = sum of A**j * B**(n-j), via the two-term recursion.

    The recursion coefficients come from (h, gamma, alpha, beta) alone:
    A+B = h-2+alpha+beta and A*B = h**2-gamma+(h-2)(alpha+beta-1)+alpha*beta.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    h, g = params.h, params.gamma
    ab_sum = h - 2 + params.alpha + params.beta
    ab_prod = h * h - g + (h - 2) * (params.alpha + params.beta - 1) + params.alpha * params.beta
    xs = [Fraction(1)]
    if n_max >= 1:
        xs.append(Fraction(ab_sum))
    for _ in range(2, n_max + 1):
        xs.append(ab_sum * xs[-1] - ab_prod * xs[-2])
    return xs


def gamma_series_xn(params: ParameterSet, p: int, order: int) -> GammaSeries:
    """Same value as gamma_series, computed through the X_n route.

    Multiplies (1-(alpha+beta)t+alpha*beta*t**2) by sum(X_n t**n) and the
    p-factor; exact agreement with gamma_series is a cross-check, since
    this route never touches the V+/V- factorization.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    a, b = params.alpha, params.beta
    quad = TruncatedSeries([1, -(a + b), a * b], order=order)
    xs = TruncatedSeries(x_sequence(params, order), order=order)
    return GammaSeries(quad * xs * p_factor(p, order), p)


@lru_cache(maxsize=None)
def _todd_factor_log(order: int) -> TruncatedSeries:
    """log of t/(1-exp(-t)) as a series in t."""
    denom = TruncatedSeries(
        [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]
    )
    return denom.inverse().log()


def _newton_power_sums(e: Sequence[Fraction], n_max: int) -> list[Fraction]:
    """Power sums P_1..P_n from elementary symmetric functions e_1..e_n."""
    p = [Fraction(0)] * (n_max + 1)
    for k in range(1, n_max + 1):
        acc = (-1) ** (k - 1) * k * e[k]
        for i in range(1, k):
            acc += (-1) ** (i - 1) * e[i] * p[k - i]
        p[k] = acc
    return p


def todd_values(g: GammaSeries | TruncatedSeries, n_max: int) -> ToddValues:
    """Td_0 .. Td_n evaluated at the gamma coefficients of g."""
    series = g.series if isinstance(g, GammaSeries) else g
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > series.order:
        raise ValueError("n_max exceeds the order of the gamma series")
    power_sums = _newton_power_sums(series.coefficients, n_max)
    lam = _todd_factor_log(n_max)
    arg = TruncatedSeries(
        [Fraction(0)] + [lam[k] * power_sums[k] for k in range(1, n_max + 1)]
    )
    return ToddValues(arg.exp().coefficients)


def todd_closed(n: int, c: Sequence[Rational]) -> Fraction:
    """The printed closed forms Td_0 .. Td_5; oracle for todd_values."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 5:
        raise UnsupportedDegree(f"no closed form stored for Td_{n}")
    if len(c) < n:
        raise ValueError(f"need at least {n} coefficients, got {len(c)}")
    cs = [Fraction(x) for x in c]
    if n == 0:
        return Fraction(1)
    c1 = cs[0]
    if n == 1:
        return c1 / 2
    c2 = cs[1]
    if n == 2:
        return (c1**2 + c2) / 12
    c3 = cs[2]
    if n == 3:
        return c1 * c2 / 24
    c4 = cs[3]
    if n == 4:
        return (-(c1**4) + 4 * c1**2 * c2 + c1 * c3 + 3 * c2**2 - c4) / 720
    return (-(c1**3) * c2 + 3 * c1 * c2**2 + c1**2 * c3 - c1 * c4) / 1440


@lru_cache(maxsize=None)
def _bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0 .. B_n in the classical convention (B_1 = -1/2)."""
    denom = TruncatedSeries([Fraction(1, factorial(k + 1)) for k in range(n + 1)])
    series = denom.inverse()  # t / (exp(t) - 1)
    return tuple(series[k] * factorial(k) for k in range(n + 1))


def bernoulli_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of B_n(x), constant term first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    numbers = _bernoulli_numbers(n)
    return tuple(comb(n, k) * numbers[n - k] for k in range(n + 1))


def _eval_poly(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def faulhaber(n: int, r: int) -> Fraction:
    """The power sum 1**n + 2**n + ... + r**n, by Bernoulli's formula."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be >= 0")
    poly = bernoulli_polynomial(n + 1)
    value = (_eval_poly(poly, Fraction(r + 1)) - _eval_poly(poly, Fraction(1))) / (n + 1)
    return value
