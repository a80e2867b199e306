"""Classification data for the irreducible finite Coxeter types.

Covers type parsing, canonical labels, exponents, dual partitions and
the parameter sets (r, h, gamma, d, nu, alpha, beta, A, B, V+, V-) that
drive every computation downstream.  No root-system geometry lives
here: roots and reflection groups are never constructed.

Parameter profiles
------------------
Most types have a single parameter set.  The dihedral family carries
two published parameterizations, so three profiles are exposed:

* ``standard``      -- the classification-table values; H2 keeps its
                       original d=2, nu=1.  Odd I2(m) with m >= 7 has no
                       workable standard row and raises ProfileMismatch.
* ``redefined``     -- d = m/2, nu = 0 for every dihedral-family type
                       (I2(m), m >= 4, including H2 = I2(5)); half-integer
                       entries then appear in both V+ and V- and cancel.
* ``h2-original``   -- like the default: redefined for I2(m >= 7), the
                       original d=2, nu=1 row for H2.

When no profile is given, plain I2 types use ``redefined`` and every
named family (including H2) uses ``standard``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ProfileMismatch, RangeError

PROFILES = ("standard", "redefined", "h2-original")

_FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "H", "I2")


@dataclass(frozen=True)
class CoxeterType:
    """An irreducible type tag: family plus rank (or m for I2)."""

    family: str
    index: int

    def __post_init__(self):
        f, n = self.family, self.index
        if f not in _FAMILIES:
            raise RangeError(f"unknown family {f!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
            "H": n in (2, 3, 4),
            "I2": n >= 3,
        }[f]
        if not ok:
            raise RangeError(f"{f}{n} is outside the classification")

    @property
    def rank(self) -> int:
        return 2 if self.family == "I2" else self.index

    @property
    def coxeter_number(self) -> int:
        f, n = self.family, self.index
        if f == "A":
            return n + 1
        if f in ("B", "C"):
            return 2 * n
        if f == "D":
            return 2 * n - 2
        if f == "E":
            return {6: 12, 7: 18, 8: 30}[n]
        if f == "F":
            return 12
        if f == "G":
            return 6
        if f == "H":
            return {2: 5, 3: 10, 4: 30}[n]
        return n  # I2(m)

    @property
    def is_crystallographic(self) -> bool:
        if self.family == "H":
            return False
        if self.family == "I2":
            return self.index in (3, 4, 6)
        return True

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.index})"
        if self.family == "C":
            return f"C{self.index}/B{self.index}"
        return f"{self.family}{self.index}"

    def __str__(self) -> str:
        return self.name


_SIMPLE_RE = re.compile(r"^([A-Za-z])\s*(\d+)$")
_I2_RE = re.compile(r"^[Ii]\s*2\s*\(\s*(\d+)\s*\)$")


def parse_type(text: str) -> CoxeterType:
    """Parse a type label such as 'E8', 'b3', 'C5/B5' or 'I2(7)'."""
    s = text.strip()
    if "/" in s:
        # Joint labels like C5/B5 round-trip when both halves agree.
        halves = s.split("/")
        if len(halves) == 2:
            try:
                left, right = (normalize(parse_type(h)) for h in halves)
            except ParseError:
                raise ParseError(f"cannot parse type {text!r}") from None
            if left == right:
                return left
        raise ParseError(f"cannot parse type {text!r}")
    m = _I2_RE.match(s)
    if m:
        return CoxeterType("I2", int(m.group(1)))
    m = _SIMPLE_RE.match(s)
    if m:
        family = m.group(1).upper()
        if family not in "ABCDEFGH":
            raise ParseError(f"cannot parse type {text!r}")
        return CoxeterType(family, int(m.group(2)))
    raise ParseError(f"cannot parse type {text!r}")


def normalize(t: CoxeterType) -> CoxeterType:
    """Canonical representative: B -> C/B, small I2(m) -> rank-2 aliases."""
    if t.family == "B":
        return CoxeterType("C", t.index)
    if t.family == "I2":
        alias = {3: ("A", 2), 4: ("C", 2), 5: ("H", 2), 6: ("G", 2)}.get(t.index)
        if alias:
            return CoxeterType(*alias)
    return t


@dataclass(frozen=True)
class ExponentList:
    """Nondecreasing list of exponents m_1 <= ... <= m_r."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if not v:
            raise ValueError("empty exponent list")
        if any(m < 1 for m in v) or any(a > b for a, b in zip(v, v[1:])):
            raise ValueError("exponents must be positive and nondecreasing")

    @property
    def rank(self) -> int:
        return len(self.values)

    @property
    def coxeter_number(self) -> int:
        return self.values[-1] + 1


_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
    ("H", 2): (1, 4),
    ("H", 3): (1, 5, 9),
    ("H", 4): (1, 11, 19, 29),
}


def exponents(t: CoxeterType) -> ExponentList:
    """The sorted exponent list of an irreducible type."""
    t = normalize(t)
    f, n = t.family, t.index
    if f == "A":
        vals = tuple(range(1, n + 1))
    elif f == "C":
        vals = tuple(range(1, 2 * n, 2))
    elif f == "D":
        vals = tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    elif f == "I2":
        vals = (1, n - 1)
    else:
        vals = _EXCEPTIONAL_EXPONENTS[(f, n)]
    return ExponentList(vals)


@dataclass(frozen=True)
class DualPartition:
    """k_j = number of exponents >= j, for j = 1 .. h-1."""

    counts: tuple[int, ...]

    def __post_init__(self):
        k = self.counts
        if any(a < b for a, b in zip(k, k[1:])) or (k and k[-1] < 0):
            raise ValueError("dual partition must be nonincreasing and nonnegative")

    @property
    def total(self) -> int:
        return sum(self.counts)


def dual_partition(e: ExponentList) -> DualPartition:
    h = e.coxeter_number
    counts = tuple(sum(1 for m in e.values if m >= j) for j in range(1, h))
    return DualPartition(counts)


def gamma_invariant(t: CoxeterType) -> int:
    """The table constant gamma (equals h**2 for the simply-laced types)."""
    t = normalize(t)
    f, n = t.family, t.index
    if f == "A":
        return (n + 1) ** 2
    if f == "C":
        return 4 * n * n + 2 * n - 2
    if f == "D":
        return (2 * n - 2) ** 2
    if f == "E":
        return t.coxeter_number ** 2
    if f == "F":
        return 162
    if f == "G":
        return 48
    if f == "H":
        return {2: 31, 3: 124, 4: 1116}[n]
    return 2 * n * n - 5 * n + 6  # I2(m)


@dataclass(frozen=True)
class ParameterSet:
    """The tuple (r, h, gamma, d, nu, alpha, beta, A, B, V+, V-) for one type."""

    r: int
    h: int
    gamma: int
    d: Fraction
    nu: int
    alpha: Fraction
    beta: Fraction
    A: Fraction
    B: Fraction
    V_plus: tuple[Fraction, ...]
    V_minus: tuple[Fraction, ...]


# Families where the table leaves beta (for A1 also alpha) arbitrary.
_ARBITRARY_BETA = ("A", "C", "G", "H2", "H3", "I2")


def _profile_for(t: CoxeterType, profile: str | None) -> str:
    """Resolve a requested profile to 'standard' or 'redefined' for t."""
    if profile is None:
        return "redefined" if t.family == "I2" else "standard"
    if profile == "standard":
        if t.family == "I2" and t.index % 2 == 1:
            raise ProfileMismatch(
                f"{t.name} has no standard parameter row; use profile 'redefined'"
            )
        return "standard"
    if profile == "redefined":
        if t.family == "I2" or (t.family, t.index) == ("H", 2):
            return "redefined"
        return "standard"
    if profile == "h2-original":
        return "redefined" if t.family == "I2" else "standard"
    raise ValueError(f"unknown profile {profile!r}; choose from {PROFILES}")


def _d_nu(t: CoxeterType, concrete: str) -> tuple[Fraction, int]:
    f, n = t.family, t.index
    if f == "A":
        return Fraction(1), 1 if n == 1 else n
    if f == "C":
        return Fraction(2), n - 2
    if f == "D":
        return Fraction(2), n - 4
    if f == "E":
        return Fraction({6: 3, 7: 4, 8: 6}[n]), 0
    if f == "F":
        return Fraction(4), 0
    if f == "G":
        return Fraction(3), 0
    if f == "H":
        if n == 2:
            return (Fraction(5, 2), 0) if concrete == "redefined" else (Fraction(2), 1)
        return (Fraction(4), 0) if n == 3 else (Fraction(10), 0)
    return Fraction(n, 2), 0  # I2(m)


def _remove_one(values: list[Fraction], x: Fraction) -> list[Fraction]:
    out = list(values)
    out.remove(x)
    return out


def parameters(
    t: CoxeterType,
    profile: str | None = None,
    beta: Fraction | int | None = None,
) -> ParameterSet:
    """Full parameter set for a type under the chosen profile.

    ``beta`` overrides the table's pinned value in the families where
    that slot is arbitrary (it then replaces the pinned entry in both
    V+ and V-); for the other types it is rejected.
    """
    t = normalize(t)
    concrete = _profile_for(t, profile)
    r = t.rank
    h = t.coxeter_number
    gamma = gamma_invariant(t)
    d, nu = _d_nu(t, concrete)

    # Explicit multisets: V- = {d, 2d-2+nu}, V+ = {4d-4+d*nu, h-d-(d-1)*nu}.
    v_minus = [d, 2 * d - 2 + nu]
    v_plus = [4 * d - 4 + d * nu, h - d - (d - 1) * nu]

    if r == 1:
        alpha = Fraction(1)
    else:
        alpha = Fraction(exponents(t).values[1] - 1)
    if alpha not in v_minus:
        raise AssertionError(f"internal table error for {t.name}")
    pinned_beta = _remove_one(v_minus, alpha)[0]

    key = f"{t.family}{t.index}" if t.family == "H" else t.family
    arbitrary = key in _ARBITRARY_BETA
    if beta is not None:
        if not arbitrary:
            raise ValueError(f"beta is determined for type {t.name}")
        beta_val = Fraction(beta)
        if beta_val <= 0:
            raise ValueError("beta must be positive")
        a_fixed = _remove_one(v_plus, pinned_beta)[0]
        v_minus = [alpha, beta_val]
        v_plus = [a_fixed, beta_val]
    else:
        beta_val = pinned_beta

    vp = tuple(sorted(v_plus))
    vm = tuple(sorted(v_minus))
    return ParameterSet(
        r=r,
        h=h,
        gamma=gamma,
        d=d,
        nu=nu,
        alpha=alpha,
        beta=beta_val,
        A=vp[0],
        B=vp[1],
        V_plus=vp,
        V_minus=vm,
    )


def applicable_profiles(t: CoxeterType) -> tuple[str, ...]:
    """Profiles that yield a parameter set for t, deduplicated by value."""
    out: list[str] = []
    seen: list[ParameterSet] = []
    for prof in ("standard", "redefined"):
        try:
            ps = parameters(t, prof)
        except ProfileMismatch:
            continue
        if ps not in seen:
            seen.append(ps)
            out.append(prof)
    return tuple(out)


def catalog(max_rank: int, max_m: int) -> list[CoxeterType]:
    """Every type with rank <= max_rank plus I2(m) for m <= max_m.

    Deterministic order: A, C, D, E, F4, G2, H, then I2; normalized with
    duplicates removed.
    """
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    if max_m < 3:
        raise ValueError("max_m must be >= 3")
    raw: list[CoxeterType] = []
    raw.extend(CoxeterType("A", n) for n in range(1, max_rank + 1))
    raw.extend(CoxeterType("C", n) for n in range(2, max_rank + 1))
    raw.extend(CoxeterType("D", n) for n in range(4, max_rank + 1))
    raw.extend(CoxeterType("E", n) for n in (6, 7, 8) if n <= max_rank)
    if max_rank >= 4:
        raw.append(CoxeterType("F", 4))
    if max_rank >= 2:
        raw.append(CoxeterType("G", 2))
    raw.extend(CoxeterType("H", n) for n in (2, 3, 4) if n <= max_rank)
    raw.extend(CoxeterType("I2", m) for m in range(3, max_m + 1))
    out: list[CoxeterType] = []
    for t in raw:
        t = normalize(t)
        if t not in out:
            out.append(t)
    return out
