"""Exact power sums of Coxeter exponents and root heights.

Everything is computed over exact rationals: truncated formal power
series, Todd polynomial values, Bernoulli/Faulhaber sums, and the
classification tables of the irreducible finite Coxeter types, plus a
verifier that checks every identity the library relies on.
"""

from .catalog import (
    PROFILES,
    CoxeterType,
    DualPartition,
    ExponentList,
    ParameterSet,
    applicable_profiles,
    catalog,
    dual_partition,
    exponents,
    gamma_invariant,
    normalize,
    parameters,
    parse_type,
)
from .errors import (
    ConstantTermNotOne,
    ConstraintViolated,
    CoxError,
    InternalMismatch,
    NonzeroConstantTerm,
    NotAPolynomial,
    ParseError,
    ProfileMismatch,
    RangeError,
    UnsupportedDegree,
    WrongFamily,
    ZeroConstantTerm,
)
from .intpoly import IntPolynomial, poly_from_factors
from .powersums import (
    PowerSumResult,
    heightsum_closed,
    heightsum_direct,
    powersum_closed,
    powersum_direct,
    powersum_todd,
)
from .series import TruncatedSeries
from .todd import (
    GammaSeries,
    ToddValues,
    bernoulli_polynomial,
    faulhaber,
    gamma_series,
    gamma_series_xn,
    p_factor,
    p_factor_general,
    todd_closed,
    todd_values,
    x_sequence,
)
from .verify import CheckReport, build_tasks, run_all, t_transform

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "ConstantTermNotOne",
    "ConstraintViolated",
    "CoxError",
    "CoxeterType",
    "DualPartition",
    "ExponentList",
    "GammaSeries",
    "IntPolynomial",
    "InternalMismatch",
    "NonzeroConstantTerm",
    "NotAPolynomial",
    "PROFILES",
    "ParameterSet",
    "ParseError",
    "PowerSumResult",
    "ProfileMismatch",
    "RangeError",
    "ToddValues",
    "TruncatedSeries",
    "UnsupportedDegree",
    "WrongFamily",
    "ZeroConstantTerm",
    "applicable_profiles",
    "bernoulli_polynomial",
    "build_tasks",
    "catalog",
    "dual_partition",
    "exponents",
    "faulhaber",
    "gamma_invariant",
    "gamma_series",
    "gamma_series_xn",
    "heightsum_closed",
    "heightsum_direct",
    "normalize",
    "p_factor",
    "p_factor_general",
    "parameters",
    "parse_type",
    "poly_from_factors",
    "powersum_closed",
    "powersum_direct",
    "powersum_todd",
    "run_all",
    "t_transform",
    "todd_closed",
    "todd_values",
    "x_sequence",
]
