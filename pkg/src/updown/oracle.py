"""Brute-force ground truth: enumerate permutations and tally signatures.

Meant for tests and small-N cross-checks only. Enumeration is capped at
``ORACLE_CAP`` (signature length 9, i.e. 10! permutations) unless the caller
passes ``force=True``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .signatures import Signature, as_signature, flip, index_of_signature, signature_from_index

__all__ = ["ORACLE_CAP", "OracleCapError", "SignatureCensus", "census", "count_one"]

ORACLE_CAP = 9


class OracleCapError(ValueError):
    """Requested enumeration exceeds the configured cap."""


def _check_cap(n: int, force: bool) -> None:
    if n > ORACLE_CAP and not force:
        raise OracleCapError(
            f"brute force over {n + 1}! permutations exceeds the cap N <= {ORACLE_CAP}; pass force=True"
        )


@dataclass(frozen=True)
class SignatureCensus:
    """Exact signature counts for all permutations of ``N + 1`` letters.

    ``counts[idx]`` is ``C(sigma)`` for ``sigma = signature_from_index(N, idx)``.
    """

    n: int
    counts: tuple[int, ...]

    def count(self, sig: str | Sequence[int]) -> int:
        s = as_signature(sig)
        if len(s) != self.n:
            raise ValueError(f"signature length {len(s)} != census length {self.n}")
        return self.counts[index_of_signature(s)]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def items(self) -> list[tuple[Signature, int]]:
        return [(signature_from_index(self.n, i), c) for i, c in enumerate(self.counts)]

    def is_flip_symmetric(self) -> bool:
        return all(self.count(flip(s)) == c for s, c in self.items())


def _tally_first(n: int, first: int) -> np.ndarray:
    """Tally every permutation of ``range(n + 1)`` that starts with ``first``."""
    rest = [v for v in range(n + 1) if v != first]
    tally = np.zeros(1 << n, dtype=np.int64)
    if n == 0:
        tally[0] = 1
        return tally
    weights = (1 << np.arange(n - 1, -1, -1)).astype(np.int64)
    perms = np.fromiter(
        itertools.chain.from_iterable(itertools.permutations(rest)),
        dtype=np.int8,
        count=math.factorial(n) * n,
    ).reshape(-1, n)
    full = np.empty((perms.shape[0], n + 1), dtype=np.int8)
    full[:, 0] = first
    full[:, 1:] = perms
    rises = (full[:, 1:] > full[:, :-1]).astype(np.int64)
    np.add.at(tally, rises @ weights, 1)
    return tally


def census(n: int, *, force: bool = False, workers: int = 1) -> SignatureCensus:
    """Count signatures over all ``(n+1)!`` permutations.

    Work is split by the first element of the permutation; with
    ``workers > 1`` the slices run in separate processes and are summed.
    """
    if n < 1:
        raise ValueError("census needs N >= 1")
    _check_cap(n, force)
    firsts = range(n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_first, [n] * (n + 1), firsts))
    else:
        parts = [_tally_first(n, f) for f in firsts]
    total = np.sum(parts, axis=0)
    return SignatureCensus(n, tuple(int(c) for c in total))


def count_one(sig: str | Sequence[int], *, force: bool = False) -> int:
    """``C(sigma)`` by backtracking over permutations consistent with ``sigma``.

    Every matching permutation is built explicitly and counted once.
    """
    s = as_signature(sig)
    n = len(s)
    _check_cap(n, force)

    def extend(pos: int, last: int, remaining: frozenset[int]) -> int:
        if pos == n:
            return 1
        rising = s[pos] > 0
        return sum(
            extend(pos + 1, v, remaining - {v})
            for v in remaining
            if (v > last) == rising
        )

    letters = frozenset(range(n + 1))
    return sum(extend(0, v, letters - {v}) for v in letters)
