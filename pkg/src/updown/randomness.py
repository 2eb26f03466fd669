"""Up-down probabilities as a randomness test for numeric series.

A series ``x_1..x_{N+1}`` is reduced to the signs of its consecutive
differences; under an i.i.d. continuous model the chance of seeing that
signature is ``P(sigma)``. Real data has ties, so a tie policy must be chosen:

``error``
    refuse the series (the default);
``drop``
    delete the later point of each run of equal consecutive values;
``jitter``
    break ties by rank: among equal values the one with the larger original
    index counts as larger (or, with a seed, a seeded shuffle of indices
    decides), which amounts to an infinitesimal deterministic perturbation.
"""

from __future__ import annotations

import csv
import json
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .bounds import upper_bound
from .compute import c_recursion, c_triangle, recursion_state_bound
from .exact_numbers import factorial, format_decimal, format_fraction
from .signatures import Composition, Signature, format_signature, to_composition

__all__ = [
    "SCHEMA",
    "TIE_POLICIES",
    "DataError",
    "SeriesInput",
    "RandomnessReport",
    "read_series",
    "series_signature",
    "randomness_report",
]

SCHEMA = "updown.randomtest/1"
TIE_POLICIES = ("error", "drop", "jitter")
# cold recursion cost scales with prod(i_k + 1); beyond this the triangle DP is used
RECURSION_STATE_LIMIT = 200_000


class DataError(ValueError):
    """Input data cannot be turned into a signature."""


@dataclass(frozen=True)
class SeriesInput:
    label: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 2:
            raise DataError(f"series {self.label!r} needs at least 2 values, got {len(self.values)}")
        if not all(math.isfinite(v) for v in self.values):
            raise DataError(f"series {self.label!r} contains non-finite values")


def read_series(path: str | Path, column: str | int) -> SeriesInput:
    """Read one numeric column from a CSV file with a header row.

    ``column`` is a header name, or a 0-based index (an ``int`` or a string of
    digits that does not match any header).
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: empty file") from None
        if isinstance(column, str) and column in header:
            col = header.index(column)
        elif isinstance(column, int) or column.isdigit():
            col = int(column)
            if col >= len(header):
                raise DataError(f"{path}: column index {col} out of range ({len(header)} columns)")
        else:
            raise DataError(f"{path}: no column named {column!r}")
        values = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                values.append(float(row[col]))
            except (ValueError, IndexError):
                raise DataError(f"{path}:{lineno}: cannot parse {row[col] if col < len(row) else ''!r}") from None
    return SeriesInput(header[col], tuple(values))


def series_signature(
    values: Sequence[float], tie_policy: str = "error", seed: int | None = None
) -> tuple[Signature, list[str]]:
    """Signature of a series after applying ``tie_policy``; also returns notes."""
    if tie_policy not in TIE_POLICIES:
        raise ValueError(f"unknown tie policy {tie_policy!r}; choose from {TIE_POLICIES}")
    vals = list(values)
    notes: list[str] = []
    ties = [i for i in range(len(vals) - 1) if vals[i] == vals[i + 1]]
    if ties:
        if tie_policy == "error":
            raise DataError(f"equal consecutive values at positions {[i + 1 for i in ties]} (0-based)")
        if tie_policy == "drop":
            kept = [vals[0]]
            for v in vals[1:]:
                if v != kept[-1]:
                    kept.append(v)
            notes.append(f"drop: removed {len(vals) - len(kept)} tied point(s)")
            vals = kept
            if len(vals) < 2:
                raise DataError("fewer than 2 points remain after dropping ties")
        else:
            order = list(range(len(vals)))
            if seed is not None:
                random.Random(seed).shuffle(order)
                notes.append(f"jitter: {len(ties)} tie(s) broken by seeded rank (seed={seed})")
            else:
                notes.append(f"jitter: {len(ties)} tie(s) broken by original index")
            keys = [(v, order[i]) for i, v in enumerate(vals)]
            return tuple(1 if keys[i + 1] > keys[i] else -1 for i in range(len(keys) - 1)), notes
    return tuple(1 if vals[i + 1] > vals[i] else -1 for i in range(len(vals) - 1)), notes


def _log2(q: Fraction) -> float:
    return math.log2(q.numerator) - math.log2(q.denominator)


@dataclass
class RandomnessReport:
    label: str
    signature: Signature
    n: int
    exact_c: int
    exact_p: Fraction
    island_bound: Fraction
    islands: Composition
    engine: str
    threshold: float | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def log2_p(self) -> float:
        return _log2(self.exact_p)

    @property
    def log2_bound(self) -> float:
        return _log2(self.island_bound)

    @property
    def certified_below_threshold(self) -> bool | None:
        """True when the bound alone already puts ``log2 P`` below the threshold."""
        if self.threshold is None:
            return None
        return self.log2_bound < self.threshold

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "label": self.label,
            "signature": format_signature(self.signature),
            "N": self.n,
            "islands": str(self.islands),
            "C": str(self.exact_c),
            "P": format_fraction(self.exact_p),
            "P_decimal": format_decimal(self.exact_p),
            "log2_P": f"{self.log2_p:.15g}",
            "bound": format_fraction(self.island_bound),
            "bound_decimal": format_decimal(self.island_bound),
            "log2_bound": f"{self.log2_bound:.15g}",
            "threshold": self.threshold,
            "certified_below_threshold": self.certified_below_threshold,
            "engine": self.engine,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        d = self.to_dict()
        width = max(map(len, d))
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in d.items() if k != "schema")


def randomness_report(
    series: SeriesInput,
    tie_policy: str = "error",
    seed: int | None = None,
    threshold: float | None = None,
) -> RandomnessReport:
    sig, notes = series_signature(series.values, tie_policy, seed)
    comp = to_composition(sig)
    if recursion_state_bound(comp) <= RECURSION_STATE_LIMIT:
        c, engine = c_recursion(comp), "recursion"
    else:
        c, engine = c_triangle(sig), "triangle"
        notes.append("recursion state space too large; used the triangle algorithm")
    n = len(sig)
    return RandomnessReport(
        label=series.label,
        signature=sig,
        n=n,
        exact_c=c,
        exact_p=Fraction(c, factorial(n + 1)),
        island_bound=upper_bound(comp),
        islands=comp,
        engine=engine,
        threshold=threshold,
        notes=notes,
    )
