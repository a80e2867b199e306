"""Integer polynomial arithmetic and the exponent-sum factorization."""

from random import Random

import pytest

from coxsums import IntPolynomial, poly_from_factors
from coxsums.errors import NotAPolynomial


def naive_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_canonical_form():
    assert IntPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert IntPolynomial([0, 0]).coefficients == ()
    assert not IntPolynomial()
    assert IntPolynomial().degree == -1
    assert IntPolynomial([0, 1]).degree == 1


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        IntPolynomial([1.5])
    with pytest.raises(TypeError):
        IntPolynomial([True])


def test_from_exponents_multiset():
    p = IntPolynomial.from_exponents([1, 3, 3, 5])
    assert p.coefficients == (0, 1, 0, 2, 0, 1)
    assert p.exponents() == [1, 3, 3, 5]
    assert str(p) == "q + 2q^3 + q^5"


def test_one_minus_power():
    assert IntPolynomial.one_minus_power(3).coefficients == (1, 0, 0, -1)
    with pytest.raises(ValueError):
        IntPolynomial.one_minus_power(0)


def test_arithmetic_against_naive_oracle():
    rng = Random(13)
    for _ in range(50):
        a = [rng.randint(-5, 5) for _ in range(rng.randint(0, 6))]
        b = [rng.randint(-5, 5) for _ in range(rng.randint(0, 6))]
        pa, pb = IntPolynomial(a), IntPolynomial(b)
        assert (pa * pb).coefficients == IntPolynomial(naive_mul(a, b)).coefficients
        total = [x + y for x, y in zip(a + [0] * len(b), b + [0] * len(a))]
        assert (pa + pb) == IntPolynomial(total[: max(len(a), len(b))])
        assert (pa - pb) + pb == pa


def test_exact_div_roundtrip():
    rng = Random(99)
    for _ in range(50):
        a = IntPolynomial([rng.randint(-4, 4) for _ in range(5)] + [1])
        b = IntPolynomial([rng.randint(-4, 4) for _ in range(3)] + [1])
        assert (a * b).exact_div(b) == a
        assert (a * b).exact_div(a) == b


def test_exact_div_failure():
    with pytest.raises(NotAPolynomial):
        IntPolynomial([1, 1]).exact_div(IntPolynomial([1, 0, 1]))
    with pytest.raises(NotAPolynomial):
        IntPolynomial([1, 1, 1]).exact_div(IntPolynomial([2, 2]))
    with pytest.raises(ZeroDivisionError):
        IntPolynomial([1]).exact_div(IntPolynomial())


def test_factorization_e8_row():
    # q(1-q^20)(1-q^24) / ((1-q^6)(1-q^10)) lists the E8 exponents.
    got = poly_from_factors(1, [20, 24], [6, 10])
    assert got == IntPolynomial.from_exponents([1, 7, 11, 13, 17, 19, 23, 29])


def test_factorization_d4_multiset():
    # Repeated factors on both sides; the quotient is q + 2q^3 + q^5.
    got = poly_from_factors(1, [4, 4], [2, 2])
    assert got == IntPolynomial.from_exponents([1, 3, 3, 5])


def test_factorization_not_a_polynomial():
    with pytest.raises(NotAPolynomial):
        poly_from_factors(1, [3], [2])


def test_factorization_shift_validation():
    with pytest.raises(ValueError):
        poly_from_factors(0, [2], [1])
