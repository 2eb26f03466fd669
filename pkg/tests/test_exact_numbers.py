from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from updown.exact_numbers import (
    bernoulli,
    binomial,
    factorial,
    format_decimal,
    format_fraction,
    tangent_coeff,
    tangent_coeffs_by_division,
)


def akiyama_tanigawa(n):
    """Independent Bernoulli route (B_1 = +1/2 convention)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (9, 362880)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (7, 0, 1), (5, 2, 10), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_k_above_n():
    with pytest.raises(ValueError):
        binomial(3, 4)


@pytest.mark.parametrize("n, expected", [(0, Fraction(1)), (1, Fraction(-1, 2)), (3, Fraction(0)),
                                         (4, Fraction(-1, 30)), (6, Fraction(1, 42))])
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_matches_akiyama_tanigawa():
    ref = akiyama_tanigawa(40)
    for n in range(2, 41):
        assert bernoulli(n) == ref[n], n


def test_bernoulli_recurrence_holds():
    for n in range(1, 30):
        assert sum(binomial(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


@pytest.mark.parametrize("k, expected", [(0, Fraction(1)), (1, Fraction(0)), (2, Fraction(-1, 3)),
                                         (4, Fraction(2, 15)), (5, Fraction(0)), (6, Fraction(-17, 315)),
                                         (8, Fraction(62, 2835))])
def test_tangent_coeff_values(k, expected):
    assert tangent_coeff(k) == expected


def test_tangent_coeff_matches_symbolic_series():
    z = sympy.symbols("z")
    series = sympy.series(sympy.tanh(z) / z, z, 0, 13).removeO()
    for k in range(13):
        coef = series.coeff(z, k)
        assert tangent_coeff(k) == Fraction(int(coef.p), int(coef.q)), k


def test_two_routes_agree():
    division = tangent_coeffs_by_division(40)
    for k in range(41):
        assert tangent_coeff(k) == division[k], k


def test_clausen_von_staudt():
    for two_k in range(2, 41, 2):
        residual = bernoulli(two_k) + sum(Fraction(1, p) for p in primes_upto(two_k + 1) if two_k % (p - 1) == 0)
        assert residual.denominator == 1, two_k


@given(st.integers(min_value=0, max_value=60))
def test_bernoulli_is_pure(n):
    assert bernoulli(n) == bernoulli(n)
    assert tangent_coeff(n) == tangent_coeff(n)


def test_formatting():
    assert format_fraction(Fraction(61, 720)) == "61/720"
    assert format_fraction(3) == "3/1"
    assert format_decimal(Fraction(1, 3)) == "3.33333333333333e-1"
    # half-even at the 15th digit: 0.1234567890123445 -> ...344
    assert format_decimal(Fraction(1234567890123445, 10**16)) == "1.23456789012344e-1"
    assert format_decimal(0) == "0.00000000000000e+0"
