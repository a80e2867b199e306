"""Truncated formal power series in t with exact rational coefficients.

A :class:`TruncatedSeries` stores the coefficients of ``t**0 .. t**order``
as `Fraction`s and nothing beyond; every operation is exact and pure.
Binary operations between two series truncate to the shorter operand, so
the result never pretends to more precision than its inputs.

Reciprocals and rational powers are routed through the formal log/exp
pair: one code path serves division, square roots, p-th roots and
arbitrary rational exponents, always on the branch with constant term 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import ConstantTermNotOne, NonzeroConstantTerm, ZeroConstantTerm

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """A power series known exactly up to and including ``t**order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar], order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            del coeffs[order + 1 :]
            coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        return cls([value], order=order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{inner}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self._coeffs[: order + 1])

    # -- ring operations ------------------------------------------------

    def _common_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        return TruncatedSeries([self[i] + other[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        return TruncatedSeries([self[i] - other[i] for i in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common_order(other)
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self._coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other[j]
                    if b:
                        out[i + j] += a * b
            return TruncatedSeries(out)
        scalar = Fraction(other)
        return TruncatedSeries([scalar * c for c in self._coeffs])

    def __rmul__(self, other) -> "TruncatedSeries":
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    # -- transcendental operations ---------------------------------------

    def log(self) -> "TruncatedSeries":
        """Formal logarithm; the constant term must be 1."""
        if self[0] != 1:
            raise ConstantTermNotOne(f"log needs constant term 1, got {self[0]}")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            acc = k * self[k]
            for j in range(1, k):
                acc -= self[j] * (k - j) * out[k - j]
            out[k] = acc / k
        return TruncatedSeries(out)

    def exp(self) -> "TruncatedSeries":
        """Formal exponential; the constant term must be 0."""
        if self[0] != 0:
            raise NonzeroConstantTerm(f"exp needs constant term 0, got {self[0]}")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if self[j]:
                    acc += j * self[j] * out[k - j]
            out[k] = acc / k
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self[0]
        if c0 == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        unit = self * (1 / c0)
        return (-unit.log()).exp() * (1 / c0)

    def pow(self, exponent: Scalar) -> "TruncatedSeries":
        """Raise to a rational power on the branch with constant term 1."""
        if self[0] != 1:
            raise ConstantTermNotOne(f"pow needs constant term 1, got {self[0]}")
        e = Fraction(exponent)
        if e == 0:
            return TruncatedSeries.constant(1, self.order)
        return (e * self.log()).exp()
