"""Square-free polynomials in the sign variables and the universal polynomial.

A monomial ``s_A`` (``A`` a finite set of positive positions) is stored as an
``int`` bit set: position ``i`` is bit ``i - 1``. Because every ``s_i``
squares to one, the ordinary product of two monomials is the XOR of their
bit sets, and evaluating ``s_A`` at a sign vector is ``(-1)`` to the number
of minus signs inside ``A``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from .exact_numbers import tangent_coeff
from .signatures import as_signature, run_type_of_set

__all__ = [
    "monomial",
    "positions",
    "LinearPolynomial",
    "gamma",
    "phi",
    "c_polynomial",
    "evaluate",
    "star_product",
    "exp_star",
    "zero_substitution",
    "gamma_expansion",
    "even_run_types",
    "gamma_term_count",
]


def monomial(pos: Iterable[int]) -> int:
    mask = 0
    for p in pos:
        if p < 1:
            raise ValueError(f"positions start at 1, got {p}")
        mask |= 1 << (p - 1)
    return mask


def positions(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _run_mask(start: int, length: int) -> int:
    return ((1 << length) - 1) << (start - 1)


class LinearPolynomial:
    """Finite rational combination of square-free monomials.

    ``n`` is the truncation level (all positions are ``<= n``). Zero
    coefficients are never stored. Instances are treated as immutable;
    equality compares the terms only, since a polynomial of level ``n`` is
    also one of every higher level.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, Fraction | int] | None = None):
        clean: dict[int, Fraction] = {}
        for mask, coef in (terms or {}).items():
            if mask < 0:
                raise ValueError("monomial masks are non-negative")
            if mask.bit_length() > n:
                raise ValueError(f"monomial {positions(mask)} exceeds truncation level {n}")
            if coef:
                clean[mask] = Fraction(coef)
        self.n = n
        self._terms = clean

    @classmethod
    def constant(cls, value: Fraction | int, n: int = 0) -> LinearPolynomial:
        return cls(n, {0: value})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, pos: Iterable[int] | int) -> Fraction:
        mask = pos if isinstance(pos, int) else monomial(pos)
        return self._terms.get(mask, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LinearPolynomial.constant(other)
        if not isinstance(other, LinearPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LinearPolynomial(n={self.n}, terms={len(self._terms)})"

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms ordered by degree, then lexicographically by positions."""
        rows = [(positions(m), c) for m, c in self._terms.items()]
        rows.sort(key=lambda row: (len(row[0]), row[0]))
        return rows

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self._terms), default=0)

    def __add__(self, other: LinearPolynomial) -> LinearPolynomial:
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LinearPolynomial(max(self.n, other.n), out)

    def __neg__(self) -> LinearPolynomial:
        return LinearPolynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: LinearPolynomial) -> LinearPolynomial:
        return self + (-other)

    def scale(self, factor: Fraction | int) -> LinearPolynomial:
        return LinearPolynomial(self.n, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: LinearPolynomial | Fraction | int) -> LinearPolynomial:
        """Ordinary product in the ring where ``s_i**2 == 1``."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[int, Fraction] = defaultdict(Fraction)
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                out[ma ^ mb] += ca * cb
        return LinearPolynomial(max(self.n, other.n), out)

    __rmul__ = scale

    def shift(self, k: int) -> LinearPolynomial:
        """Rename ``s_i`` to ``s_{i+k}``."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return LinearPolynomial(self.n + k, {m << k: c for m, c in self._terms.items()})


def gamma(run_type: Sequence[int], n: int) -> LinearPolynomial:
    """Sum of ``s_A`` over all ``A`` in ``{1..n}`` with the given run type."""
    parts = tuple(run_type)
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"run type parts must be >= 1, got {parts}")
    terms: dict[int, int] = {}

    def place(k: int, start: int, mask: int) -> None:
        if k == len(parts):
            terms[mask] = 1
            return
        need = sum(parts[k:]) + (len(parts) - k - 1)
        for a in range(start, n - need + 2):
            place(k + 1, a + parts[k] + 1, mask | _run_mask(a, parts[k]))

    place(0, 1, 0)
    return LinearPolynomial(n, terms)


def _even_run_sets(n: int) -> Iterator[tuple[int, Fraction]]:
    """Every ``A`` in ``{1..n}`` whose runs all have even length, with its weight.

    The weight is the product of ``T`` over the run lengths. Odd runs are
    skipped at the source since their ``T`` vanishes.
    """

    def rec(start: int, mask: int, weight: Fraction) -> Iterator[tuple[int, Fraction]]:
        yield mask, weight
        for a in range(start, n):
            for length in range(2, n - a + 2, 2):
                yield from rec(a + length + 1, mask | _run_mask(a, length), weight * tangent_coeff(length))

    yield from rec(1, 0, Fraction(1))


@lru_cache(maxsize=64)
def phi(n: int) -> LinearPolynomial:
    """Universal polynomial truncated at level ``n``."""
    if n < 0:
        raise ValueError("truncation level must be >= 0")
    return LinearPolynomial(n, dict(_even_run_sets(n)))


@lru_cache(maxsize=64)
def c_polynomial(n: int) -> LinearPolynomial:
    """Interpolating polynomial of ``C`` on signatures of length ``n``."""
    if n < 1:
        raise ValueError("c_polynomial needs N >= 1")
    return phi(n).scale(Fraction(math.factorial(n + 1), 2**n))


def evaluate(p: LinearPolynomial, sig: str | Sequence[int]) -> Fraction:
    """Value of ``p`` at a sign vector at least as long as its support."""
    s = as_signature(sig)
    support = 0
    for m in p.terms:
        support |= m
    if support.bit_length() > len(s):
        raise ValueError(
            f"signature of length {len(s)} is shorter than the polynomial support {support.bit_length()}"
        )
    minus = 0
    for i, v in enumerate(s):
        if v < 0:
            minus |= 1 << i
    total = Fraction(0)
    for m, c in p.terms.items():
        total += -c if (m & minus).bit_count() & 1 else c
    return total


def _touch(a: int, b: int) -> bool:
    """True if some position of ``a`` equals or neighbours a position of ``b``."""
    return bool(a & (b | (b << 1) | (b >> 1)))


def star_product(a: LinearPolynomial, b: LinearPolynomial) -> LinearPolynomial:
    """Gap-separated product: ``s_A * s_B = s_{A | B}`` when no position of
    ``A`` equals or is adjacent to a position of ``B``, otherwise ``0``.

    For single runs this is the usual rule (one block lies entirely before the
    other with at least one unused index in between); requiring it for every
    pair of positions keeps the product associative on multi-run monomials.
    """
    out: dict[int, Fraction] = defaultdict(Fraction)
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if not _touch(ma, mb):
                out[ma | mb] += ca * cb
    return LinearPolynomial(max(a.n, b.n), out)


def exp_star(a: LinearPolynomial, degree_cap: int | None = None) -> LinearPolynomial:
    """``1 + a + a*a/2! + ...`` under :func:`star_product`.

    ``a`` must have no constant term, so each power raises the minimum
    degree and the series stops once a power vanishes or passes ``degree_cap``
    (default: the truncation level).
    """
    if a.coefficient(0):
        raise ValueError("exp_star needs a polynomial with zero constant term")
    cap = a.n if degree_cap is None else degree_cap
    result = LinearPolynomial.constant(1, a.n)
    power = LinearPolynomial.constant(1, a.n)
    k = 0
    while True:
        k += 1
        power = star_product(power, a).scale(Fraction(1, k))
        if not power or power.min_degree() > cap:
            return result
        result = result + power


def zero_substitution(p: LinearPolynomial, n: int) -> LinearPolynomial:
    """Set ``s_n = 0``: drop every monomial containing position ``n``."""
    if n < 1:
        raise ValueError("positions start at 1")
    bit = 1 << (n - 1)
    return LinearPolynomial(p.n, {m: c for m, c in p.terms.items() if not m & bit})


def gamma_expansion(p: LinearPolynomial) -> dict[tuple[int, ...], Fraction]:
    """Rewrite ``p`` as a combination of gamma series.

    The constant term is keyed by ``()``. Raises if two monomials of the same
    run type carry different coefficients, or if some monomial of a run type
    present in ``p`` is missing (i.e. ``p`` is not such a combination).
    """
    by_type: dict[tuple[int, ...], Fraction] = {}
    counts: dict[tuple[int, ...], int] = defaultdict(int)
    for m, c in p.terms.items():
        rt = run_type_of_set(positions(m)) if m else ()
        if rt in by_type and by_type[rt] != c:
            raise ValueError(f"run type {rt} has unequal coefficients {by_type[rt]} and {c}")
        by_type[rt] = c
        counts[rt] += 1
    for rt, seen in counts.items():
        if rt and seen != len(gamma(rt, p.n)):
            raise ValueError(f"run type {rt}: {seen} monomials present, gamma has {len(gamma(rt, p.n))}")
    return by_type


def even_run_types(n: int) -> Iterator[tuple[int, ...]]:
    """Run types with all parts even whose tightest placement fits in ``{1..n}``."""

    def rec(prefix: tuple[int, ...], used: int) -> Iterator[tuple[int, ...]]:
        for part in range(2, n + 1, 2):
            footprint = used + part + (1 if prefix else 0)
            if footprint > n:
                break
            run_type = (*prefix, part)
            yield run_type
            yield from rec(run_type, footprint)

    yield from rec((), 0)


def gamma_term_count(n: int) -> int:
    """Number of gamma series with non-zero coefficient in ``c_n``."""
    if n < 1:
        raise ValueError("gamma_term_count needs N >= 1")
    return sum(1 for _ in even_run_types(n))
