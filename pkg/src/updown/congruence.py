"""Residues of up-down numbers modulo small integers.

Two kinds of predictor are offered. The prime predictors implement the
closed congruences for signatures of length ``p - 1`` and ``p``. The
polynomial predictor reduces the interpolating polynomial ``c_N`` (or
``2 c_N``) coefficient by coefficient and evaluates it mod ``m``. A sweep
compares either one against exact values over every signature of length ``N``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .compute import c_distribution
from .poly import LinearPolynomial, c_polynomial, positions
from .signatures import Signature, as_signature, signature_from_index

__all__ = [
    "InadmissibleModulusError",
    "is_prime",
    "ResiduePolynomial",
    "reduce_polynomial",
    "reduce_c_polynomial",
    "predict_residue_prime_minus_one",
    "predict_residue_prime",
    "mod9_length8",
    "mod7_length8",
    "polynomial_predictor",
    "SweepRow",
    "SweepReport",
    "verify_congruence_sweep",
]

Predictor = Callable[[Signature], int]


class InadmissibleModulusError(ValueError):
    """A coefficient denominator shares a factor with the modulus."""

    def __init__(self, modulus: int, denominator: int, term: tuple[int, ...]):
        self.modulus = modulus
        self.denominator = denominator
        self.term = term
        super().__init__(
            f"modulus {modulus} is not coprime to denominator {denominator} (term at positions {term})"
        )


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ResiduePolynomial:
    """Square-free polynomial with coefficients in ``Z/mZ`` (zero residues dropped)."""

    modulus: int
    n: int
    terms: dict[int, int] = field(default_factory=dict)

    def coefficient(self, mask: int) -> int:
        return self.terms.get(mask, 0)

    def evaluate(self, sig: str | Sequence[int]) -> int:
        s = as_signature(sig)
        if len(s) < self.n:
            raise ValueError(f"signature shorter than truncation level {self.n}")
        minus = sum(1 << i for i, v in enumerate(s) if v < 0)
        total = 0
        for m, r in self.terms.items():
            total += -r if (m & minus).bit_count() & 1 else r
        return total % self.modulus


def _reduce(q: Fraction, m: int, term: tuple[int, ...]) -> int:
    try:
        inv = pow(q.denominator, -1, m)
    except ValueError:
        raise InadmissibleModulusError(m, q.denominator, term) from None
    return q.numerator * inv % m


def reduce_polynomial(p: LinearPolynomial, m: int) -> ResiduePolynomial:
    if m < 2:
        raise ValueError("modulus must be >= 2")
    terms = {}
    for mask, coef in p.terms.items():
        r = _reduce(coef, m, positions(mask))
        if r:
            terms[mask] = r
    return ResiduePolynomial(m, p.n, terms)


def reduce_c_polynomial(n: int, m: int, doubled: bool = False) -> ResiduePolynomial:
    """``c_N`` (or ``2 c_N`` when ``doubled``) reduced mod ``m``."""
    p = c_polynomial(n)
    return reduce_polynomial(p.scale(2) if doubled else p, m)


def _check_prime_length(s: Signature, p: int, length: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if len(s) != length:
        raise ValueError(f"signature length {len(s)} != {length}")


def _sign_product(s: Sequence[int]) -> int:
    out = 1
    for v in s:
        out *= v
    return out


def predict_residue_prime_minus_one(sig: str | Sequence[int], p: int) -> int:
    """``C(sigma) mod p`` for ``|sigma| = p - 1``: the product of all signs."""
    s = as_signature(sig)
    _check_prime_length(s, p, p - 1)
    return _sign_product(s) % p


def predict_residue_prime(sig: str | Sequence[int], p: int) -> int:
    """``C(sigma) mod p`` for ``|sigma| = p`` from ``2C = (s_1 + s_p) s_1...s_p``."""
    s = as_signature(sig)
    _check_prime_length(s, p, p)
    doubled = (s[0] + s[-1]) * _sign_product(s)
    return doubled * pow(2, -1, p) % p


def mod9_length8(sig: str | Sequence[int]) -> int:
    s = as_signature(sig)
    if len(s) != 8:
        raise ValueError("formula applies to signatures of length 8")
    return (6 * s[2] * s[5] + 4) * _sign_product(s) % 9


def mod7_length8(sig: str | Sequence[int]) -> int:
    s = as_signature(sig)
    if len(s) != 8:
        raise ValueError("formula applies to signatures of length 8")
    return (4 * (s[0] * s[1] + s[0] * s[7] + s[6] * s[7]) + 3) * _sign_product(s) % 7


def polynomial_predictor(n: int, m: int) -> Predictor:
    """Predict ``C mod m`` from the reduced ``c_N``.

    Falls back to ``2 c_N`` when ``c_N`` itself is inadmissible but 2 is a
    unit mod ``m``; the residue is then halved. Raises
    :class:`InadmissibleModulusError` when neither works.
    """
    try:
        rp = reduce_c_polynomial(n, m)
        return rp.evaluate
    except InadmissibleModulusError:
        if m % 2 == 0:
            raise
    rp2 = reduce_c_polynomial(n, m, doubled=True)
    half = pow(2, -1, m)
    return lambda s: rp2.evaluate(s) * half % m


@dataclass(frozen=True)
class SweepRow:
    index: int
    signature: Signature
    actual: int
    predicted: int


@dataclass
class SweepReport:
    n: int
    modulus: int
    rows: list[SweepRow]

    @property
    def violations(self) -> list[SweepRow]:
        return [r for r in self.rows if r.actual != r.predicted]

    @property
    def histogram(self) -> Counter:
        return Counter(r.actual for r in self.rows)

    @property
    def residues(self) -> set[int]:
        return set(self.histogram)


def verify_congruence_sweep(n: int, m: int, predictor: Predictor, workers: int = 1) -> SweepReport:
    """Compare ``predictor`` against exact ``C mod m`` on all ``2**n`` signatures.

    Exact values may be computed across ``workers`` processes; predictions
    and row assembly stay in the calling process.
    """
    exact = c_distribution(n, workers)
    rows = []
    for idx, c in enumerate(exact):
        s = signature_from_index(n, idx)
        rows.append(SweepRow(idx, s, c % m, predictor(s) % m))
    return SweepReport(n, m, rows)

