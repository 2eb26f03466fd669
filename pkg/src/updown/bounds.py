"""Upper bounds and inequalities for up-down probabilities.

Everything here is exact rational arithmetic; no verdict depends on
floating point. Island inequalities accept zero-length middle islands, which
are normalised by merging neighbours before evaluation.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .compute import c_recursion, normalize_islands, p_of_signature, p_value
from .signatures import Composition, as_islands, as_signature

__all__ = [
    "BoundReport",
    "upper_bound",
    "bound_report",
    "complementary_bound_check",
    "separability_approx",
    "monotonicity_check",
    "claim_inequality_check",
]


@dataclass(frozen=True)
class BoundReport:
    islands: tuple[int, ...]
    exact_p: Fraction
    bound: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.exact_p / self.bound

    @property
    def satisfied(self) -> bool:
        return self.exact_p <= self.bound


def upper_bound(comp: Composition | str | Sequence[int]) -> Fraction:
    """Island-size upper bound on ``P(i_1, ..., i_n)``.

    ``prod_{k=2}^{n-1} (i_k + 1) / prod_{k=1}^{n-1} (i_k + i_{k+1} + 1)``
    times ``1 / (i_1! ... i_n!)``. One island gives ``1 / i_1!``; two islands
    give ``P(i_1, i_2)`` exactly.
    """
    islands = as_islands(comp)
    num = 1
    for i in islands[1:-1]:
        num *= i + 1
    den = 1
    for a, b in zip(islands, islands[1:]):
        den *= a + b + 1
    for i in islands:
        den *= math.factorial(i)
    return Fraction(num, den)


def bound_report(comp: Composition | str | Sequence[int]) -> BoundReport:
    islands = as_islands(comp)
    return BoundReport(islands, p_value(islands), upper_bound(islands))


def complementary_bound_check(
    rho: str | Sequence[int], tau: str | Sequence[int]
) -> tuple[Fraction, Fraction]:
    """``(P(rho, 1, tau), P(rho) P(tau))``; the first never exceeds the second.

    The inserted single sign is opposite to the last sign of ``rho`` (``-``
    if ``rho`` is empty), so it forms an island of its own on the left.
    """
    r = as_signature(rho)
    t = as_signature(tau)
    joint = -r[-1] if r else -1
    return p_of_signature((*r, joint, *t)), p_of_signature(r) * p_of_signature(t)


def separability_approx(comp: Composition | str | Sequence[int]) -> Fraction:
    """``prod P(i_k, i_{k+1}) / prod_{k=2}^{n-1} P(i_k)``, from exact two- and one-island values."""
    islands = as_islands(comp)
    if len(islands) < 2:
        raise ValueError("separability approximation needs at least two islands")
    out = Fraction(1)
    for a, b in zip(islands, islands[1:]):
        out *= p_value((a, b))
    for i in islands[1:-1]:
        out /= p_value((i,))
    return out


def _c(parts: Sequence[int]) -> int:
    return c_recursion(normalize_islands(parts))


def _alpha(alpha: Composition | Sequence[int]) -> tuple[int, ...]:
    return as_islands(alpha) if isinstance(alpha, Composition) else tuple(alpha)


def monotonicity_check(alpha: Composition | Sequence[int], a: int, b: int, c: int) -> bool:
    """``C(alpha, a, b, c) >= C(alpha, a + 1, b, c - 1)`` for ``a >= c >= 1``."""
    if not a >= c >= 1 or b < 0:
        raise ValueError(f"need a >= c >= 1 and b >= 0, got a={a}, b={b}, c={c}")
    head = _alpha(alpha)
    return _c((*head, a, b, c)) >= _c((*head, a + 1, b, c - 1))


def claim_inequality_check(
    alpha: Composition | Sequence[int], a: int, b: int, c: int, n: int
) -> bool:
    """``C(alpha, a - n, b, c) >= C(alpha, a + 1, b, c - n - 1)`` for ``a >= c >= 1``, ``0 <= n < c``."""
    if not a >= c >= 1 or b < 0 or not 0 <= n <= c - 1:
        raise ValueError(f"need a >= c >= 1, b >= 0, 0 <= n <= c - 1; got a={a}, b={b}, c={c}, n={n}")
    head = _alpha(alpha)
    return _c((*head, a - n, b, c)) >= _c((*head, a + 1, b, c - n - 1))
