from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from updown.compute import c_recursion
from updown.exact_numbers import tangent_coeff
from updown.oracle import census
from updown.poly import (
    LinearPolynomial,
    c_polynomial,
    evaluate,
    even_run_types,
    exp_star,
    gamma,
    gamma_expansion,
    gamma_term_count,
    monomial,
    phi,
    positions,
    star_product,
    zero_substitution,
)
from updown.signatures import all_signatures, run_type_of_set, to_composition


def mono(*pos, n=None, coef=1):
    return LinearPolynomial(n or max(pos, default=0), {monomial(pos): coef})


def interpolate(n):
    """Walsh-Hadamard interpolation of the brute-force census (independent of Phi)."""
    cen = census(n)
    terms = {}
    for mask in range(1 << n):
        total = 0
        for sig, count in cen.items():
            sign = 1
            for i in range(n):
                if mask >> i & 1:
                    sign *= sig[i]
            total += sign * count
        terms[mask] = Fraction(total, 2**n)
    return LinearPolynomial(n, terms)


def tanh_sum(n):
    out = LinearPolynomial(n)
    for i in range(1, n + 1):
        out = out + gamma((i,), n).scale(tangent_coeff(i))
    return out


def test_gamma_examples():
    assert gamma((2, 2, 2), 8) == mono(1, 2, 4, 5, 7, 8)
    assert gamma((8,), 8) == mono(*range(1, 9))
    for n in range(2, 12):
        g = gamma((2,), n)
        assert len(g) == n - 1
        assert all(positions(m) == (k, k + 1) for k, m in enumerate(sorted(g.terms), start=1))
    assert not gamma((4, 4), 8)


def test_gamma_listing_length_8():
    assert len(gamma((2,), 8)) == 7
    assert len(gamma((4,), 8)) == 5
    assert len(gamma((2, 2), 8)) == 10
    assert len(gamma((6,), 8)) == 3
    assert len(gamma((2, 4), 8)) == 3
    assert len(gamma((4, 2), 8)) == 3
    assert gamma((2, 4), 8) == mono(1, 2, 4, 5, 6, 7) + mono(1, 2, 5, 6, 7, 8) + mono(2, 3, 5, 6, 7, 8)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(1, 12))
def test_gamma_monomials_have_the_run_type(parts, n):
    g = gamma(parts, n)
    for m, c in g.terms.items():
        assert c == 1
        assert run_type_of_set(positions(m)) == tuple(parts)


def test_phi_small():
    assert phi(1) == LinearPolynomial.constant(1)
    assert phi(2) == LinearPolynomial.constant(1) + mono(1, 2, coef=Fraction(-1, 3))


def test_phi_8_coefficients():
    expansion = gamma_expansion(phi(8))
    assert expansion == {
        (): 1, (2,): Fraction(-1, 3), (4,): Fraction(2, 15), (2, 2): Fraction(1, 9),
        (6,): Fraction(-17, 315), (2, 4): Fraction(-2, 45), (4, 2): Fraction(-2, 45),
        (2, 2, 2): Fraction(-1, 27), (8,): Fraction(62, 2835),
    }


def test_c_polynomial_small():
    s12, s23, s34, s45 = mono(1, 2), mono(2, 3), mono(3, 4), mono(4, 5)
    one = LinearPolynomial.constant(1)
    assert c_polynomial(1) == one
    assert c_polynomial(2) == (one.scale(3) - s12).scale(Fraction(1, 2))
    assert c_polynomial(3) == one.scale(3) - s12 - s23
    c4 = one.scale(15) - (s12 + s23 + s34).scale(5) + mono(1, 2, 3, 4).scale(2)
    assert c_polynomial(4) == c4.scale(Fraction(1, 2))
    c5 = (one.scale(45) - (s12 + s23 + s34 + s45).scale(15)
          + (mono(1, 2, 3, 4) + mono(2, 3, 4, 5)).scale(6) + mono(1, 2, 4, 5).scale(5))
    assert c_polynomial(5) == c5.scale(Fraction(1, 2))


def test_c_polynomial_8_doubled():
    assert gamma_expansion(c_polynomial(8).scale(2)) == {
        (): 2835, (2,): -945, (4,): 378, (2, 2): 315, (6,): -153,
        (2, 4): -126, (4, 2): -126, (2, 2, 2): -105, (8,): 62,
    }


@pytest.mark.parametrize("n", range(1, 8))
def test_c_polynomial_equals_interpolation_of_census(n):
    assert c_polynomial(n) == interpolate(n)


def test_evaluate_examples():
    assert evaluate(c_polynomial(4), "+-+-") == 16
    assert evaluate(c_polynomial(8), "---++--+") == 1016
    for n in range(1, 10):
        assert evaluate(phi(n), "-" * n) == evaluate(phi(n), "+" * n)


def test_evaluate_rejects_short_signature():
    with pytest.raises(ValueError):
        evaluate(c_polynomial(4), "+-+")
    assert evaluate(c_polynomial(3), "+-+-+") == evaluate(c_polynomial(3), "+-+")


@pytest.mark.parametrize("n", range(1, 10))
def test_c_polynomial_matches_census_exhaustively(n):
    cn = c_polynomial(n)
    cen = census(n)
    for sig, count in cen.items():
        assert evaluate(cn, sig) == count


@pytest.mark.parametrize("n", range(1, 16))
def test_only_even_runs_appear(n):
    for m in phi(n).terms:
        if m:
            assert all(part % 2 == 0 for part in run_type_of_set(positions(m)))


def test_star_examples():
    assert not star_product(mono(1, 2), mono(2, 3))
    assert star_product(mono(1, 2), mono(4, 5)) == mono(1, 2, 4, 5)
    assert star_product(mono(4, 5), mono(1, 2)) == mono(1, 2, 4, 5)
    assert not star_product(mono(1, 2), mono(3, 4))
    p = c_polynomial(5)
    assert star_product(LinearPolynomial.constant(1), p) == p


def test_star_agrees_with_ordered_rule_on_runs():
    # for single runs the product is the ordered-with-gap rule
    runs = [(a, length) for a in range(1, 10) for length in range(1, 5) if a + length - 1 <= 12]
    for a, la in runs:
        for b, lb in runs:
            pa, pb = range(a, a + la), range(b, b + lb)
            separated = max(pa) + 1 < min(pb) or max(pb) + 1 < min(pa)
            got = star_product(mono(*pa), mono(*pb))
            assert bool(got) == separated


monomials_12 = st.sets(st.integers(1, 12), max_size=6).map(lambda s: mono(*sorted(s), n=12))


@settings(max_examples=300)
@given(monomials_12, monomials_12, monomials_12)
def test_star_commutative_and_associative(a, b, c):
    assert star_product(a, b) == star_product(b, a)
    assert star_product(star_product(a, b), c) == star_product(a, star_product(b, c))


def test_exp_star_examples():
    assert exp_star(LinearPolynomial(6)) == LinearPolynomial.constant(1)
    with pytest.raises(ValueError):
        exp_star(LinearPolynomial.constant(1, 3))


@pytest.mark.parametrize("n", range(1, 11))
def test_exp_star_gives_phi(n):
    assert exp_star(tanh_sum(n)) == phi(n)


def test_exp_star_factorises():
    e2 = exp_star(gamma((2,), 5).scale(tangent_coeff(2)))
    e4 = exp_star(gamma((4,), 5).scale(tangent_coeff(4)))
    assert star_product(e2, e4) == phi(5)
    e6 = exp_star(gamma((6,), 8).scale(tangent_coeff(6)))
    e8 = exp_star(gamma((8,), 8).scale(tangent_coeff(8)))
    e2, e4 = (exp_star(gamma((k,), 8).scale(tangent_coeff(k))) for k in (2, 4))
    assert star_product(star_product(star_product(e2, e4), e6), e8) == phi(8)


def test_zero_substitution_examples():
    assert zero_substitution(phi(3), 2) == LinearPolynomial.constant(1)
    assert zero_substitution(phi(8), 4) == phi(3) * phi(4).shift(4)
    assert zero_substitution(LinearPolynomial.constant(1, 4), 3) == LinearPolynomial.constant(1)


@pytest.mark.parametrize("n", range(2, 11))
def test_zero_substitution_factorises(n):
    for k in range(1, n + 1):
        assert zero_substitution(phi(n), k) == phi(k - 1) * phi(n - k).shift(k)


@pytest.mark.parametrize("n", range(1, 10))
def test_self_similarity(n):
    for sig in all_signatures(n):
        lhs = evaluate(phi(n), sig)
        rhs = (evaluate(phi(n + 1), (*sig, 1)) + evaluate(phi(n + 1), (*sig, -1))) / 2
        assert lhs == rhs


def test_gamma_term_count():
    assert gamma_term_count(8) == 8
    assert gamma_term_count(2) == 1
    assert gamma_term_count(1) == 0
    for n in range(1, 16):
        assert gamma_term_count(n) == len(gamma_expansion(phi(n))) - 1


def test_gamma_term_count_growth():
    counts = {n: gamma_term_count(n) for n in range(16, 42)}
    for n in range(20, 41):
        assert 1.25 <= counts[n + 1] / counts[n] <= 1.40
        # a(N) = a(N-2) + a(N-3) + 1
        assert counts[n + 1] == counts[n - 1] + counts[n - 2] + 1


def test_even_run_types_are_even_and_fit():
    for rt in even_run_types(12):
        assert all(p % 2 == 0 for p in rt)
        assert sum(rt) + len(rt) - 1 <= 12


def test_polynomial_algebra():
    p = mono(1, 2, coef=3) + LinearPolynomial.constant(2)
    assert p * p == LinearPolynomial.constant(13) + mono(1, 2, coef=12)
    assert p - p == LinearPolynomial(2)
    assert p.shift(2) == mono(3, 4, coef=3) + LinearPolynomial.constant(2)
    assert [pos for pos, _ in c_polynomial(4).sorted_terms()] == [(), (1, 2), (2, 3), (3, 4), (1, 2, 3, 4)]
    with pytest.raises(ValueError):
        LinearPolynomial(2, {monomial((3,)): 1})


def test_c_polynomial_scaling():
    for n in range(1, 12):
        assert c_polynomial(n) == phi(n).scale(Fraction(factorial(n + 1), 2**n))
        assert evaluate(c_polynomial(n), "+-" * (n // 2) + "+" * (n % 2)) == c_recursion((1,) * n)
        assert evaluate(c_polynomial(n), "+" * n) == 1
        assert to_composition("+" * n).islands == (n,)
