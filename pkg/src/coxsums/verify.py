"""Exact verification suites over the whole classification.

Each ``check_*`` function returns a :class:`CheckReport`; a failed
report always carries a witness describing the first failing instance
with both side values.  Checks accept their inputs (parameter sets,
exponent lists, evaluators) as optional arguments so tests can inject a
corrupted constant and prove the suite is able to fail.

``build_tasks`` lays out every sub-check of every suite in a fixed
catalog order; ``run_all`` executes them sequentially.  Tasks are pure,
so a caller may execute them concurrently and reassemble the reports by
index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from random import Random
from typing import Callable, Sequence

from . import powersums as _powersums
from . import todd as _todd
from .catalog import (
    CoxeterType,
    ExponentList,
    ParameterSet,
    applicable_profiles,
    catalog,
    exponents,
    normalize,
    parameters,
)
from .errors import ConstantTermNotOne, NotAPolynomial, WrongFamily
from .intpoly import IntPolynomial, poly_from_factors
from .series import TruncatedSeries

SUITE_NAMES = (
    "expsum",
    "multiset",
    "gamma",
    "h-relation",
    "beta",
    "symmetry",
    "todd-symm",
    "kostant",
    "t-transform",
    "specializations",
    "gamma34",
    "methods",
)


@dataclass(frozen=True)
class CheckReport:
    suite: str
    subject: str
    passed: bool
    witness: str | None = None


def _report(suite: str, subject: str, failures: list[str]) -> CheckReport:
    if failures:
        return CheckReport(suite, subject, False, failures[0])
    return CheckReport(suite, subject, True)


def _subject(t: CoxeterType, profile: str | None = None) -> str:
    name = normalize(t).name
    return f"{name} [{profile}]" if profile else name


def _resolve(
    t: CoxeterType, profile: str | None, params: ParameterSet | None
) -> ParameterSet:
    return params if params is not None else parameters(t, profile)


def _exps(t: CoxeterType, exps: ExponentList | None) -> ExponentList:
    return exps if exps is not None else exponents(t)


def catalan(k: int) -> Fraction:
    """Catalan numbers, extended by C_{-1} = -1/2."""
    if k == -1:
        return Fraction(-1, 2)
    if k < -1:
        raise ValueError("k must be >= -1")
    return Fraction(comb(2 * k, k), k + 1)


# -- per-type table identities ------------------------------------------


def _cancelled(params: ParameterSet) -> tuple[Counter, Counter]:
    plus, minus = Counter(params.V_plus), Counter(params.V_minus)
    common = plus & minus
    return plus - common, minus - common


def check_expsum(
    t: CoxeterType,
    profile: str | None = None,
    params: ParameterSet | None = None,
    exps: ExponentList | None = None,
) -> CheckReport:
    """sum(q**m_i) equals q * prod(1-q**v, V+) / prod(1-q**v, V-) exactly."""
    ps = _resolve(t, profile, params)
    el = _exps(t, exps)
    failures: list[str] = []
    plus, minus = _cancelled(ps)
    entries = list(plus.elements()) + list(minus.elements())
    if any(v.denominator != 1 or v <= 0 for v in entries):
        failures.append(
            f"non-integer factor exponents after cancellation: "
            f"V+={sorted(plus.elements())}, V-={sorted(minus.elements())}"
        )
    else:
        vp = [int(v) for v in plus.elements()]
        vm = [int(v) for v in minus.elements()]
        lhs = IntPolynomial.from_exponents(el.values)
        # Cross-multiplied form, always defined.
        left = lhs * _product_poly(vm)
        right = IntPolynomial.monomial(1) * _product_poly(vp)
        if left != right:
            failures.append(f"sum(q**m_i)*prod(V-) = {left} but q*prod(V+) = {right}")
        else:
            try:
                quotient = poly_from_factors(1, vp, vm)
            except NotAPolynomial as e:
                failures.append(str(e))
            else:
                if quotient != lhs:
                    failures.append(f"division gives {quotient}, exponents give {lhs}")
    return _report("expsum", _subject(t, profile), failures)


def _product_poly(vs: Sequence[int]) -> IntPolynomial:
    out = IntPolynomial([1])
    for v in vs:
        out = out * IntPolynomial.one_minus_power(v)
    return out


def check_multiset_laws(
    t: CoxeterType,
    profile: str | None = None,
    params: ParameterSet | None = None,
) -> CheckReport:
    """prod(V+) = r * prod(V-) and |V+| = |V-|, before any cancellation."""
    ps = _resolve(t, profile, params)
    failures = []
    prod_plus = Fraction(1)
    for v in ps.V_plus:
        prod_plus *= v
    prod_minus = Fraction(1)
    for v in ps.V_minus:
        prod_minus *= v
    if prod_plus != ps.r * prod_minus:
        failures.append(f"prod(V+) = {prod_plus} but r*prod(V-) = {ps.r * prod_minus}")
    if len(ps.V_plus) != len(ps.V_minus):
        failures.append(f"|V+| = {len(ps.V_plus)} but |V-| = {len(ps.V_minus)}")
    return _report("multiset", _subject(t, profile), failures)


def check_gamma_formula(
    t: CoxeterType,
    profile: str | None = None,
    params: ParameterSet | None = None,
) -> CheckReport:
    """gamma = h**2 + (h-2)(alpha+beta-1) - (r-1)*alpha*beta."""
    ps = _resolve(t, profile, params)
    expected = (
        ps.h * ps.h
        + (ps.h - 2) * (ps.alpha + ps.beta - 1)
        - (ps.r - 1) * ps.alpha * ps.beta
    )
    failures = []
    if ps.gamma != expected:
        failures.append(f"gamma = {ps.gamma} but formula gives {expected}")
    return _report("gamma", _subject(t, profile), failures)


def check_h_relation(
    t: CoxeterType,
    profile: str | None = None,
    params: ParameterSet | None = None,
) -> CheckReport:
    """h = (d/2)(r + 2 + nu)."""
    ps = _resolve(t, profile, params)
    expected = Fraction(ps.d, 2) * (ps.r + 2 + ps.nu)
    failures = []
    if ps.h != expected:
        failures.append(f"h = {ps.h} but (d/2)(r+2+nu) = {expected}")
    return _report("h-relation", _subject(t, profile), failures)


def check_beta_formula(
    t: CoxeterType,
    profile: str | None = None,
    params: ParameterSet | None = None,
) -> CheckReport:
    """beta = (h**2 - gamma + (h-2)(alpha-1)) / (2 + (r-1)*alpha - h).

    When the denominator vanishes beta is unconstrained and the check
    passes vacuously.
    """
    ps = _resolve(t, profile, params)
    denom = 2 + (ps.r - 1) * ps.alpha - ps.h
    if denom == 0:
        return CheckReport(
            "beta", _subject(t, profile), True, "beta unconstrained (denominator zero)"
        )
    expected = (ps.h * ps.h - ps.gamma + (ps.h - 2) * (ps.alpha - 1)) / denom
    failures = []
    if ps.beta != expected:
        failures.append(f"beta = {ps.beta} but formula gives {expected}")
    return _report("beta", _subject(t, profile), failures)


def check_symmetry_identities(
    t: CoxeterType,
    a_max: int,
    b_max: int,
    exps: ExponentList | None = None,
) -> CheckReport:
    """Alternating binomial identities induced by m_i + m_{r+1-i} = h.

    For every 0 <= a <= a_max, 0 <= b <= b_max:
    sum_j (-1)**(a-j) C(a,j) h**j S_{a+b-j} = same with a <-> b,
    where S_k = sum(m_i**k).
    """
    if a_max < 0 or b_max < 0:
        raise ValueError("a_max and b_max must be >= 0")
    el = _exps(t, exps)
    h = el.coxeter_number
    top = a_max + b_max
    sums = [sum(Fraction(m) ** k for m in el.values) for k in range(top + 1)]
    failures = []
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            lhs = sum(
                (-1) ** (a - j) * comb(a, j) * Fraction(h) ** j * sums[a + b - j]
                for j in range(a + 1)
            )
            rhs = sum(
                (-1) ** (b - j) * comb(b, j) * Fraction(h) ** j * sums[a + b - j]
                for j in range(b + 1)
            )
            if lhs != rhs:
                failures.append(f"(a={a}, b={b}): {lhs} != {rhs}")
    return _report("symmetry", _subject(t), failures)


# -- Todd symmetry by randomized evaluation -------------------------------


def _default_todd(series: TruncatedSeries, n_max: int) -> Sequence[Fraction]:
    return _todd.todd_values(series, n_max).values


def check_todd_symmetry(
    a: int,
    b: int,
    samples: int = 50,
    seed: int = 42,
    todd_fn: Callable[[TruncatedSeries, int], Sequence[Fraction]] | None = None,
) -> CheckReport:
    """Alternating binomial identity between c_1**j (a+b-j)! Td_{a+b-j} terms.

    Polynomial identity testing: both sides are evaluated at seeded
    pseudo-random rational tuples (numerators and denominators up to
    100) and must agree exactly at every sample.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    evaluate = todd_fn if todd_fn is not None else _default_todd
    n = a + b
    rng = Random(f"{seed}:{a}:{b}")
    failures = []
    for trial in range(samples):
        cs = [
            Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(n)
        ]
        series = TruncatedSeries([Fraction(1)] + cs)
        td = evaluate(series, n)
        c1 = cs[0] if cs else Fraction(0)
        lhs = sum(
            (-1) ** (a - j) * comb(a, j) * c1**j * factorial(n - j) * td[n - j]
            for j in range(a + 1)
        )
        rhs = sum(
            (-1) ** (b - j) * comb(b, j) * c1**j * factorial(n - j) * td[n - j]
            for j in range(b + 1)
        )
        if lhs != rhs:
            failures.append(f"sample {trial}, c = {cs}: {lhs} != {rhs}")
            break
    return _report("todd-symm", f"(a={a}, b={b})", failures)


# -- D/E parameters in Kostant form ---------------------------------------


def check_de_kostant(
    t: CoxeterType,
    params: ParameterSet | None = None,
) -> CheckReport:
    """For types D and E: with a = 2d, b = h+2-2d, the multisets satisfy
    V- = {a/2, b/2}, V+ = {b, r*a/4}, h = d*r - 4d + 6 and
    d*(h - 2r - 6d + 26) = 24."""
    tn = normalize(t)
    if tn.family not in ("D", "E"):
        raise WrongFamily(f"{tn.name} is not of type D or E")
    ps = _resolve(t, None, params)
    a = 2 * ps.d
    b = ps.h + 2 - 2 * ps.d
    failures = []
    want_minus = tuple(sorted([a / 2, b / 2]))
    if ps.V_minus != want_minus:
        failures.append(f"V- = {ps.V_minus}, expected {want_minus}")
    want_plus = tuple(sorted([Fraction(b), ps.r * a / 4]))
    if ps.V_plus != want_plus:
        failures.append(f"V+ = {ps.V_plus}, expected {want_plus}")
    if ps.h != ps.d * ps.r - 4 * ps.d + 6:
        failures.append(f"h = {ps.h} but d*r-4d+6 = {ps.d * ps.r - 4 * ps.d + 6}")
    product = ps.d * (ps.h - 2 * ps.r - 6 * ps.d + 26)
    if product != 24:
        failures.append(f"d*(h-2r-6d+26) = {product}, expected 24")
    return _report("kostant", _subject(t), failures)


# -- the T transformation --------------------------------------------------


def t_transform(f: TruncatedSeries, iterations: int = 1, ell: int = 2) -> TruncatedSeries:
    """Apply f(t) -> f(ell*t)**(1/ell) the given number of times.

    Computed by the coefficient recursion (for ell = 2:
    b_n = 2**(n-1) a_n - (1/2) sum b_j b_{n-j}), not through series_pow,
    so integrality of intermediate coefficients is observable.
    """
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    out = f
    for _ in range(iterations):
        out = _t_once(out, ell)
    return out


def _t_once(f: TruncatedSeries, ell: int) -> TruncatedSeries:
    if f[0] != 1:
        raise ConstantTermNotOne("T needs a series with constant term 1")
    n = f.order
    b = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        # coefficient of t**k in (b_0 + ... + b_{k-1} t**(k-1))**ell
        partial = TruncatedSeries(b[:k], order=k)
        power = TruncatedSeries.constant(1, k)
        for _ in range(ell):
            power = power * partial
        b[k] = (Fraction(ell) ** k * f[k] - power[k]) / ell
    return TruncatedSeries(b)


def check_t_integrality(
    k_max: int,
    order: int,
    start: TruncatedSeries | None = None,
) -> CheckReport:
    """Iterating T on (1+t)/(1-t) keeps all coefficients even integers
    beyond the constant, and T**k equals the p-factor at p = 2**k."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    f = start
    if f is None:
        f = TruncatedSeries([1] + [2] * order)
    failures = []
    current = f
    for k in range(k_max + 1):
        for n, c in enumerate(current.coefficients):
            if n >= 1 and (c.denominator != 1 or c % 2 != 0):
                failures.append(f"k={k}: coefficient of t**{n} is {c}, not an even integer")
                break
        if failures:
            break
        expected = _todd.p_factor(2**k, order)
        if current != expected:
            failures.append(f"k={k}: T**k differs from the p-factor at p = {2**k}")
            break
        if k < k_max:
            current = t_transform(current)
    return _report("t-transform", f"T**k integrality (k<={k_max})", failures)


def _default_t_rows(order: int) -> list[tuple[str, TruncatedSeries, TruncatedSeries]]:
    ints = range(order + 1)
    return [
        (
            "a_n = n+1 -> b_n = 2**n",
            TruncatedSeries([n + 1 for n in ints]),
            TruncatedSeries([Fraction(2) ** n for n in ints]),
        ),
        (
            "a_n = 2**n -> b_n = C(2n, n)",
            TruncatedSeries([Fraction(2) ** n for n in ints]),
            TruncatedSeries([comb(2 * n, n) for n in ints]),
        ),
        (
            "a_n = Catalan(n+1) -> b_n = 2**n * Catalan(n)",
            TruncatedSeries([catalan(n + 1) for n in ints]),
            TruncatedSeries([Fraction(2) ** n * catalan(n) for n in ints]),
        ),
    ]


def check_t_examples(
    order: int = 20,
    rows: list[tuple[str, TruncatedSeries, TruncatedSeries]] | None = None,
) -> list[CheckReport]:
    """The three tabulated T-transformation sequence pairs."""
    reports = []
    for label, source, expected in rows if rows is not None else _default_t_rows(order):
        got = t_transform(source)
        failures = []
        if got != expected:
            failures.append(f"T(a) = {got.coefficients[:6]}..., expected {expected.coefficients[:6]}...")
        reports.append(_report("t-transform", label, failures))
    return reports


# -- gamma coefficient formulas --------------------------------------------


def check_gamma_specializations(
    t: CoxeterType,
    n_max: int,
    params: ParameterSet | None = None,
) -> CheckReport:
    """Closed forms for gamma_n in rank for the A and C families.

    A_r at p=1: gamma_n = r**n + r**(n-1).  C_r at p=1:
    gamma_n = (2r)**n - 2*sum((2r)**j, j<=n-2); at p=2:
    gamma_n = -2*sum(Catalan(j-1)*(2r)**(n-2j), 2j<=n) with Catalan(-1) = -1/2.
    """
    tn = normalize(t)
    if tn.family not in ("A", "C"):
        raise WrongFamily(f"{tn.name} is not of type A or C")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ps = _resolve(t, None, params)
    r = ps.r
    failures = []
    if tn.family == "A":
        series = _todd.gamma_series(ps, 1, n_max).series
        for n in range(1, n_max + 1):
            expected = Fraction(r) ** n + Fraction(r) ** (n - 1)
            if series[n] != expected:
                failures.append(f"p=1, n={n}: gamma_n = {series[n]}, formula {expected}")
                break
    else:
        series1 = _todd.gamma_series(ps, 1, n_max).series
        series2 = _todd.gamma_series(ps, 2, n_max).series
        for n in range(1, n_max + 1):
            want1 = Fraction(2 * r) ** n - 2 * sum(
                (Fraction(2 * r) ** j for j in range(n - 1)), Fraction(0)
            )
            if series1[n] != want1:
                failures.append(f"p=1, n={n}: gamma_n = {series1[n]}, formula {want1}")
                break
            want2 = -2 * sum(
                (
                    catalan(j - 1) * Fraction(2 * r) ** (n - 2 * j)
                    for j in range(n // 2 + 1)
                ),
                Fraction(0),
            )
            if series2[n] != want2:
                failures.append(f"p=2, n={n}: gamma_n = {series2[n]}, formula {want2}")
                break
    return _report("specializations", _subject(t), failures)


def check_gamma34(
    t: CoxeterType,
    p: int,
    params: ParameterSet | None = None,
) -> CheckReport:
    """The explicit gamma_3 and gamma_4 polynomials in (h, gamma, alpha, beta, p)."""
    ps = _resolve(t, None, params)
    h, g = ps.h, ps.gamma
    s, q = ps.alpha + ps.beta, ps.alpha * ps.beta
    series = _todd.gamma_series(ps, p, 4).series
    gamma3 = (
        -(h**3) + 2 * h * g - 2 * g + Fraction(2 * p * p + 4, 3)
        - (h * h - g - h + 2) * s - (h - 2) * q
    )
    gamma4 = (
        -(h**4) + h * h * g + g * g + 3 * h**3 - 6 * h * g - h * h + 2 * g
        + Fraction(2, 3) * h * (p * p + 5) - 2
        - (h * h - g - h + 2) * ((2 * h - 2 + s) * s - q)
        - (h - 2) * (2 * h - 2 + s) * q
    )
    failures = []
    if series[3] != gamma3:
        failures.append(f"gamma_3 = {series[3]} but formula gives {gamma3}")
    if series[4] != gamma4:
        failures.append(f"gamma_4 = {series[4]} but formula gives {gamma4}")
    return _report("gamma34", f"{_subject(t)} (p={p})", failures)


# -- cross-method power sums ------------------------------------------------


def _direct_sum(t: CoxeterType, n: int, exps: ExponentList | None) -> Fraction:
    if exps is None:
        return _powersums.powersum_direct(t, n).value
    return sum((Fraction(m) ** n for m in exps.values), Fraction(0))


def _direct_heights(t: CoxeterType, n: int, exps: ExponentList | None) -> Fraction:
    if exps is None:
        return _powersums.heightsum_direct(t, n).value
    return sum((_todd.faulhaber(n, m) for m in exps.values), Fraction(0))


def check_methods(
    t: CoxeterType,
    n_max: int = 12,
    ps_values: tuple[int, ...] = (1, 2, 3),
    exps: ExponentList | None = None,
    params: ParameterSet | None = None,
) -> CheckReport:
    """Todd, closed-form and direct power sums agree; heights too."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    resolved = _resolve(t, None, params)
    failures = []
    for n in range(n_max + 1):
        direct = _direct_sum(t, n, exps)
        if direct.denominator != 1 or direct < 0:
            failures.append(f"n={n}: direct sum {direct} is not a nonnegative integer")
            break
        for p in ps_values:
            todd_value = _powersums.powersum_todd(t, n, p, params=resolved).value
            if todd_value != direct:
                failures.append(f"n={n}, p={p}: todd {todd_value} != direct {direct}")
                break
        if failures:
            break
        if n <= 5:
            closed = _powersums.powersum_closed(t, n, params=resolved).value
            if closed != direct:
                failures.append(f"n={n}: closed {closed} != direct {direct}")
                break
        if n <= 4:
            hclosed = _powersums.heightsum_closed(t, n, params=resolved).value
            hdirect = _direct_heights(t, n, exps)
            if hclosed != hdirect:
                failures.append(f"heights n={n}: closed {hclosed} != direct {hdirect}")
                break
    tn = normalize(t)
    if not failures and tn.family in ("A", "D", "E"):
        # Simply-laced: gamma = h**2 forces the classical height-sum form.
        h, r = tn.coxeter_number, tn.rank
        if resolved.gamma != h * h:
            failures.append(f"gamma = {resolved.gamma} != h**2 = {h * h}")
        else:
            want = Fraction(r * (h * h + h), 6)
            got = _direct_heights(t, 1, exps)
            if got != want:
                failures.append(f"height sum {got} != r(h**2+h)/6 = {want}")
    return _report("methods", _subject(t), failures)


def check_s4_nonuniversality() -> CheckReport:
    """The fourth-power sum is not r times a function of (h, gamma) alone.

    A9 and D6 share h = 10 and gamma = 100, yet their fourth-power sums
    divided by the rank differ.
    """
    a9 = CoxeterType("A", 9)
    d6 = CoxeterType("D", 6)
    failures = []
    pa, pd = parameters(a9), parameters(d6)
    if (pa.h, pa.gamma) != (pd.h, pd.gamma):
        failures.append(
            f"A9 has (h, gamma) = {(pa.h, pa.gamma)}, D6 has {(pd.h, pd.gamma)}"
        )
    else:
        left = _powersums.powersum_direct(a9, 4).value / pa.r
        right = _powersums.powersum_direct(d6, 4).value / pd.r
        if left == right:
            failures.append(f"S4/r coincide at {left}; expected a strict inequality")
    return _report("methods", "A9 vs D6 (S4 not universal in h, gamma)", failures)


# -- suite orchestration -----------------------------------------------------

Task = tuple[str, str, Callable[[], CheckReport]]


def _per_type_profile_tasks(
    suite: str,
    types: Sequence[CoxeterType],
    fn: Callable[..., CheckReport],
) -> list[Task]:
    tasks: list[Task] = []
    for t in types:
        for prof in applicable_profiles(t):
            tasks.append(
                (suite, _subject(t, prof), lambda t=t, prof=prof: fn(t, prof))
            )
    return tasks


def build_tasks(
    max_rank: int = 12,
    max_m: int = 30,
    n_max: int = 12,
    seed: int = 42,
    suites: Sequence[str] | None = None,
) -> list[Task]:
    """All sub-checks of the selected suites, in deterministic order."""
    selected = tuple(suites) if suites is not None else SUITE_NAMES
    for name in selected:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}")
    types = catalog(max_rank, max_m)
    tasks: list[Task] = []
    for suite in SUITE_NAMES:
        if suite not in selected:
            continue
        if suite == "expsum":
            tasks += _per_type_profile_tasks(suite, types, check_expsum)
        elif suite == "multiset":
            tasks += _per_type_profile_tasks(suite, types, check_multiset_laws)
        elif suite == "gamma":
            tasks += _per_type_profile_tasks(suite, types, check_gamma_formula)
        elif suite == "h-relation":
            tasks += _per_type_profile_tasks(suite, types, check_h_relation)
        elif suite == "beta":
            tasks += _per_type_profile_tasks(suite, types, check_beta_formula)
        elif suite == "symmetry":
            for t in types:
                tasks.append(
                    (suite, _subject(t), lambda t=t: check_symmetry_identities(t, 4, 4))
                )
        elif suite == "todd-symm":
            for total in range(9):
                for a in range(total + 1):
                    b = total - a
                    tasks.append(
                        (
                            suite,
                            f"(a={a}, b={b})",
                            lambda a=a, b=b: check_todd_symmetry(a, b, 50, seed),
                        )
                    )
        elif suite == "kostant":
            for t in types:
                if t.family in ("D", "E"):
                    tasks.append((suite, _subject(t), lambda t=t: check_de_kostant(t)))
        elif suite == "t-transform":
            for i, (label, source, expected) in enumerate(_default_t_rows(20)):
                tasks.append(
                    (
                        suite,
                        label,
                        lambda row=(label, source, expected): check_t_examples(
                            rows=[row]
                        )[0],
                    )
                )
            tasks.append(
                (suite, "T**k integrality (k<=5)", lambda: check_t_integrality(5, 30))
            )
        elif suite == "specializations":
            for t in types:
                if normalize(t).family in ("A", "C"):
                    tasks.append(
                        (
                            suite,
                            _subject(t),
                            lambda t=t: check_gamma_specializations(t, n_max),
                        )
                    )
        elif suite == "gamma34":
            for t in types:
                for p in (1, 2):
                    tasks.append(
                        (
                            suite,
                            f"{_subject(t)} (p={p})",
                            lambda t=t, p=p: check_gamma34(t, p),
                        )
                    )
        elif suite == "methods":
            for t in types:
                tasks.append(
                    (suite, _subject(t), lambda t=t: check_methods(t, n_max))
                )
            tasks.append(
                (
                    suite,
                    "A9 vs D6 (S4 not universal in h, gamma)",
                    check_s4_nonuniversality,
                )
            )
    return tasks


def run_all(
    max_rank: int = 12,
    max_m: int = 30,
    n_max: int = 12,
    seed: int = 42,
    suites: Sequence[str] | None = None,
) -> list[CheckReport]:
    """Run every selected suite sequentially; deterministic given the seed."""
    return [task() for _, _, task in build_tasks(max_rank, max_m, n_max, seed, suites)]
