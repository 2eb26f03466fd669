"""Exact integers and rationals used throughout the package.

Python's ``int`` and :class:`fractions.Fraction` already give arbitrary
precision and lowest-terms normalisation, so they serve as the big-integer
and big-rational types. This module adds the combinatorial constants on top:
factorials, binomials, Bernoulli numbers and the Taylor coefficients of
``tanh(z)/z``.
"""

from __future__ import annotations

import math
import threading
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

__all__ = [
    "factorial",
    "binomial",
    "bernoulli",
    "tangent_coeff",
    "tangent_coeffs_by_division",
    "format_fraction",
    "format_decimal",
]

_lock = threading.Lock()
# B_0, B_1, ... with B_1 = -1/2
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Exact ``n`` choose ``k``; ``k`` must lie in ``[0, n]``."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}) needs non-negative arguments")
    if k > n:
        raise ValueError(f"binomial({n}, {k}) needs k <= n")
    return math.comb(n, k)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` as an exact rational.

    Uses the convention ``B_1 = -1/2`` (generating function ``z/(e^z - 1)``).
    Values are produced by the recurrence
    ``sum_{k=0}^{n} C(n+1, k) B_k = 0`` and cached; the cache only ever
    grows, under a lock, so concurrent readers see a consistent prefix.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {n}")
    if n >= 3 and n % 2 == 1:
        return Fraction(0)
    cache = _bernoulli_cache
    if n < len(cache):
        return cache[n]
    with _lock:
        while len(cache) <= n:
            m = len(cache)
            acc = sum((math.comb(m + 1, k) * cache[k] for k in range(m)), Fraction(0))
            cache.append(-acc / (m + 1))
    return cache[n]


def tangent_coeff(k: int) -> Fraction:
    """Coefficient ``T_k`` of ``z^k`` in ``tanh(z)/z``.

    ``T_0 = 1``, odd indices vanish, and for even ``k >= 2``
    ``T_k = 2^n (2^n - 1) B_n / n!`` with ``n = k + 2``.
    """
    if k < 0:
        raise ValueError(f"tangent coefficient index must be >= 0, got {k}")
    if k == 0:
        return Fraction(1)
    if k % 2 == 1:
        return Fraction(0)
    n = k + 2
    return Fraction(2**n * (2**n - 1)) * bernoulli(n) / math.factorial(n)


def tangent_coeffs_by_division(k_max: int) -> list[Fraction]:
    """``T_0..T_{k_max}`` from exact power-series division ``(sinh z / z) / cosh z``.

    Independent of the Bernoulli route; used to cross-check :func:`tangent_coeff`.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    num = [Fraction(1, math.factorial(j + 1)) if j % 2 == 0 else Fraction(0) for j in range(k_max + 1)]
    den = [Fraction(1, math.factorial(j)) if j % 2 == 0 else Fraction(0) for j in range(k_max + 1)]
    out: list[Fraction] = []
    for k in range(k_max + 1):
        acc = num[k] - sum((den[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(acc)  # den[0] == 1
    return out


def format_fraction(q: Fraction | int) -> str:
    """Render as ``num/den`` (always with a denominator)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def format_decimal(q: Fraction | int, digits: int = 15) -> str:
    """Scientific rendering with ``digits`` significant digits, round-half-even.

    The division happens in :mod:`decimal` at the target precision, so the
    result is the correctly rounded value of the exact rational.
    """
    q = Fraction(q)
    if q == 0:
        return f"{0:.{digits - 1}f}e+0"
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    value = ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    return format(value, f".{digits - 1}e")
