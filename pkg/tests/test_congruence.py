from fractions import Fraction

import pytest

from updown.compute import c_triangle
from updown.congruence import (
    InadmissibleModulusError,
    is_prime,
    mod7_length8,
    mod9_length8,
    polynomial_predictor,
    predict_residue_prime,
    predict_residue_prime_minus_one,
    reduce_c_polynomial,
    reduce_polynomial,
    verify_congruence_sweep,
)
from updown.oracle import census
from updown.poly import LinearPolynomial, monomial
from updown.signatures import all_signatures


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_examples():
    assert predict_residue_prime_minus_one("-+-+", 5) == 1
    assert predict_residue_prime("++++-", 5) == 0
    assert predict_residue_prime("+++++", 5) == 1
    assert mod9_length8("++++++++") == 1
    assert mod7_length8("++++++++") == 1


def test_predictors_validate():
    with pytest.raises(ValueError):
        predict_residue_prime_minus_one("+-+", 5)
    with pytest.raises(ValueError):
        predict_residue_prime("+-+", 4)
    with pytest.raises(ValueError):
        predict_residue_prime_minus_one("+", 2)
    with pytest.raises(ValueError):
        mod9_length8("+-")


@pytest.mark.parametrize("p", [3, 5, 7])
def test_prime_congruence_against_census(p):
    # exact residues from brute-force counts, not from the recursion
    for n, pred, allowed in ((p - 1, predict_residue_prime_minus_one, {1, p - 1}),
                             (p, predict_residue_prime, {0, 1, p - 1})):
        if n > 9:
            continue
        seen = set()
        for sig, count in census(n).items():
            assert count % p == pred(sig, p)
            seen.add(count % p)
        assert seen == allowed


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_congruence_sweeps(p):
    rep = verify_congruence_sweep(p - 1, p, lambda s: predict_residue_prime_minus_one(s, p))
    assert len(rep.rows) == 2 ** (p - 1)
    assert not rep.violations
    assert rep.residues == {1, p - 1}
    rep = verify_congruence_sweep(p, p, lambda s: predict_residue_prime(s, p))
    assert not rep.violations
    assert rep.residues == {0, 1, p - 1}


def test_prime_congruence_sweep_p13_by_triangle():
    for sig in list(all_signatures(13))[::97]:
        assert c_triangle(sig) % 13 == predict_residue_prime(sig, 13)


def test_length8_formulas():
    cen = census(8)
    seen9 = set()
    for sig, count in cen.items():
        assert count % 9 == mod9_length8(sig)
        assert count % 7 == mod7_length8(sig)
        seen9.add(count % 9)
    assert seen9 <= {1, 2, 7, 8}


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_reduction_keeps_only_top_monomial(p):
    rp = reduce_c_polynomial(p - 1, p)
    assert rp.terms == {(1 << (p - 1)) - 1: 1}


def test_reductions_length8():
    assert reduce_c_polynomial(8, 9, doubled=True).terms == {219: 3, 255: 8}
    assert reduce_c_polynomial(8, 7, doubled=True).terms == {63: 1, 126: 1, 252: 1, 255: 6}
    assert reduce_c_polynomial(8, 9).terms == {219: 6, 255: 4}
    assert reduce_c_polynomial(2, 5).terms == {0: 4, 3: 2}


def test_inadmissible_modulus():
    with pytest.raises(InadmissibleModulusError) as info:
        reduce_c_polynomial(2, 4)
    assert info.value.modulus == 4
    assert info.value.denominator == 2
    with pytest.raises(InadmissibleModulusError):
        polynomial_predictor(4, 4)
    with pytest.raises(ValueError):
        reduce_polynomial(LinearPolynomial.constant(1), 1)


def test_reduce_polynomial_drops_zero_residues():
    p = LinearPolynomial(2, {0: Fraction(5, 2), monomial((1, 2)): 7})
    assert reduce_polynomial(p, 7).terms == {0: 6}


@pytest.mark.parametrize("n,m", [(5, 7), (6, 11), (7, 9), (8, 9), (8, 7), (7, 8)])
def test_polynomial_predictor_matches_census(n, m):
    pred = polynomial_predictor(n, m)
    for sig, count in census(n).items():
        assert pred(sig) == count % m


def test_sweep_histogram():
    rep = verify_congruence_sweep(4, 5, lambda s: predict_residue_prime_minus_one(s, 5))
    assert sum(rep.histogram.values()) == 16
    assert rep.histogram == {1: 8, 4: 8}
