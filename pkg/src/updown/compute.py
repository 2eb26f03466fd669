"""Production algorithms for up-down numbers ``C(sigma)`` and ``P(sigma)``.

Three independent routes are provided:

* :func:`c_recursion` -- the multinomial-style linear recursion on island
  lengths, memoised on the island tuple (``C`` is invariant under flipping
  every sign, so the leading sign is not part of the key);
* :func:`c_closed_form` -- the nested alternating sum for ``P``, multiplied
  back by ``(N+1)!``;
* :func:`c_triangle` -- a prefix dynamic programme over the rank of the last
  element, whose summands are all non-negative.
"""

from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate

from .exact_numbers import factorial, tangent_coeff
from .signatures import Composition, as_islands, as_signature, signature_from_index, to_composition

__all__ = [
    "normalize_islands",
    "c_recursion",
    "p_value",
    "p_of_signature",
    "c_closed_form",
    "c_triangle",
    "quadratic_check",
    "even_rise_count",
    "clear_memo",
    "memo_size",
    "recursion_state_bound",
    "c_distribution",
]

_memo: dict[tuple[int, ...], int] = {(): 1}
_memo_lock = threading.Lock()


def normalize_islands(parts: Sequence[int]) -> tuple[int, ...]:
    """Remove zero-length islands.

    Leading and trailing zeros are dropped. An odd run of interior zeros
    merges its neighbours (``C(a, i, 0, j, b) = C(a, i + j, b)``); an even
    run cancels out and leaves the neighbours as separate islands.
    """
    out: list[int] = []
    zeros = 0
    for x in parts:
        if x < 0:
            raise ValueError(f"negative island length in {tuple(parts)}")
        if x == 0:
            zeros += 1
            continue
        if out and zeros % 2 == 1:
            out[-1] += x
        else:
            out.append(x)
        zeros = 0
    return tuple(out)


def _c_rec(key: tuple[int, ...]) -> int:
    hit = _memo.get(key)
    if hit is not None:
        return hit
    total = 0
    for k in range(len(key)):
        reduced = list(key)
        reduced[k] -= 1
        total += _c_rec(normalize_islands(reduced))
    with _memo_lock:
        _memo.setdefault(key, total)
    return total


def c_recursion(comp: Composition | str | Sequence[int]) -> int:
    """``C`` via ``C(i_1..i_n) = sum_k C(.., i_k - 1, ..)`` with ``C(empty) = 1``.

    Accepts a :class:`Composition`, a signature string, or island lengths.
    """
    return _c_rec(normalize_islands(as_islands(comp)))


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()
        _memo[()] = 1


def memo_size() -> int:
    return len(_memo)


def recursion_state_bound(comp: Composition | str | Sequence[int]) -> int:
    """Upper bound on the number of memo entries a cold recursion may touch."""
    bound = 1
    for i in as_islands(comp):
        bound *= i + 1
    return bound


def p_value(comp: Composition | str | Sequence[int]) -> Fraction:
    """``P = C / (N+1)!``, the probability that a random curve has this signature."""
    islands = as_islands(comp)
    return Fraction(c_recursion(islands), factorial(sum(islands) + 1))


def p_of_signature(sig: str | Sequence[int]) -> Fraction:
    return p_value(to_composition(sig))


def c_closed_form(comp: Composition | str | Sequence[int]) -> int:
    """``C`` from the nested alternating sum over ``r_2, ..., r_n``.

    The sum is evaluated innermost-first: ``f(m, x)`` is ``P`` of the
    signature whose first ``m - 1`` islands are ``i_1..i_{m-1}`` and whose
    last island has length ``x``; each level expands one more ``r``.
    """
    islands = as_islands(comp)
    if not islands:
        return 1
    n = len(islands)

    @lru_cache(maxsize=None)
    def inv_fact(k: int) -> Fraction:
        return Fraction(1, factorial(k))

    @lru_cache(maxsize=None)
    def f(m: int, x: int) -> Fraction:
        if m == 1:
            return inv_fact(x + 1)
        prev = islands[m - 2]
        acc = Fraction(0)
        for r in range(x + 1):
            term = f(m - 1, prev + r) * inv_fact(x - r)
            acc += -term if r % 2 else term
        return acc

    p = f(n, islands[-1])
    c = p * factorial(sum(islands) + 1)
    if c.denominator != 1 or c < 0:
        raise ArithmeticError(f"closed form produced {c} for islands {islands}")
    return int(c)


def c_triangle(sig: str | Sequence[int]) -> int:
    """``C`` by a prefix DP over the rank of the last element.

    ``row[r]`` counts permutations of ``m + 1`` letters with the first ``m``
    signs of ``sig`` whose last letter has rank ``r``. Appending a rise sums
    the lower ranks, a fall sums the rest.
    """
    row = [1]
    for step in as_signature(sig):
        prefix = [0, *accumulate(row)]
        total = prefix[-1]
        if step > 0:
            row = prefix
        else:
            row = [total - p for p in prefix]
    return sum(row)


def quadratic_check(sigma: str | Sequence[int], mu: str | Sequence[int]) -> tuple[Fraction, Fraction]:
    """Both sides of ``P(sigma) P(mu) = P(sigma + mu) + P(sigma - mu)``.

    ``sigma + mu`` joins the two signatures through an extra ``+``,
    ``sigma - mu`` through an extra ``-``.
    """
    s = as_signature(sigma)
    u = as_signature(mu)
    left = p_of_signature(s) * p_of_signature(u)
    right = p_of_signature((*s, 1, *u)) + p_of_signature((*s, -1, *u))
    return left, right


def even_rise_count(n: int) -> int:
    """Permutations of ``n + 1`` letters with an even number of rises."""
    if n < 1:
        raise ValueError("even_rise_count needs N >= 1")
    value = Fraction(factorial(n + 1), 2) * (1 + tangent_coeff(n))
    if value.denominator != 1:
        raise ArithmeticError(f"E_{n + 1} came out non-integral: {value}")
    return int(value)


def _c_slice(n: int, lo: int, hi: int) -> list[int]:
    return [c_recursion(to_composition(signature_from_index(n, i))) for i in range(lo, hi)]


def c_distribution(n: int, workers: int = 1) -> list[int]:
    """``C`` for every signature of length ``n``, in binary-index order.

    With ``workers > 1`` the index range is split into contiguous slices,
    each computed in its own process with its own memo table.
    """
    size = 1 << n
    if workers <= 1 or size < 1024:
        return _c_slice(n, 0, size)
    step = -(-size // (4 * workers))
    bounds = [(lo, min(lo + step, size)) for lo in range(0, size, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_c_slice, [n] * len(bounds), *zip(*bounds))
        return [c for part in parts for c in part]
