"""Up-down signatures and their alternative encodings.

A signature is stored as a tuple of ``+1``/``-1`` entries. Text form uses one
character per entry (``"+"`` / ``"-"``) with no separators. A composition
records the island (run) lengths together with the sign of the first island.

Binary index convention, used by every distribution dump: bit ``j`` of the
index, read most-significant first over ``N`` bits, gives ``sigma_j`` with
``0 -> -`` and ``1 -> +``. Index 0 is the all-minus signature.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import groupby

__all__ = [
    "Signature",
    "Composition",
    "as_signature",
    "parse_signature",
    "format_signature",
    "to_composition",
    "from_composition",
    "as_islands",
    "parse_composition",
    "run_type_of_set",
    "signature_from_index",
    "index_of_signature",
    "flip",
    "reverse",
    "all_signatures",
    "compositions",
]

Signature = tuple[int, ...]

_CHAR_TO_SIGN = {"+": 1, "-": -1}


def parse_signature(text: str) -> Signature:
    try:
        return tuple(_CHAR_TO_SIGN[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"invalid signature character {exc.args[0]!r} in {text!r}") from None


def format_signature(sig: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in sig)


def as_signature(sig: str | Sequence[int]) -> Signature:
    """Coerce text or a sequence of +/-1 into a :data:`Signature` tuple."""
    if isinstance(sig, str):
        return parse_signature(sig)
    out = tuple(int(s) for s in sig)
    if any(s not in (1, -1) for s in out):
        raise ValueError(f"signature entries must be +1 or -1, got {out}")
    return out


@dataclass(frozen=True)
class Composition:
    """Island lengths of a signature plus the sign of the first island."""

    leading_sign: int
    islands: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.leading_sign not in (1, -1):
            raise ValueError(f"leading_sign must be +1 or -1, got {self.leading_sign}")
        object.__setattr__(self, "islands", tuple(int(i) for i in self.islands))
        if any(i < 1 for i in self.islands):
            raise ValueError(f"island lengths must be >= 1, got {self.islands}")

    @property
    def length(self) -> int:
        return sum(self.islands)

    def __str__(self) -> str:
        sign = "+" if self.leading_sign > 0 else "-"
        return f"{sign}:{','.join(map(str, self.islands))}"


def parse_composition(text: str) -> Composition:
    """Parse ``"+:2,3,1"`` style text."""
    sign, sep, rest = text.partition(":")
    if not sep or sign not in _CHAR_TO_SIGN:
        raise ValueError(f"composition must look like '+:2,3,1', got {text!r}")
    try:
        islands = tuple(int(x) for x in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise ValueError(f"bad island lengths in {text!r}") from None
    return Composition(_CHAR_TO_SIGN[sign], islands)


def to_composition(sig: str | Sequence[int]) -> Composition:
    """Run-length encode. The empty signature maps to ``(+, ())``."""
    s = as_signature(sig)
    if not s:
        return Composition(1, ())
    return Composition(s[0], tuple(len(list(g)) for _, g in groupby(s)))


def from_composition(comp: Composition) -> Signature:
    out: list[int] = []
    sign = comp.leading_sign
    for length in comp.islands:
        out.extend([sign] * length)
        sign = -sign
    return tuple(out)


def as_islands(obj: Composition | str | Sequence[int]) -> tuple[int, ...]:
    """Island lengths of a composition, or of text (a signature or ``"+:2,3,1"``).

    A bare integer sequence is taken to already be island lengths.
    """
    if isinstance(obj, Composition):
        return obj.islands
    if isinstance(obj, str):
        return (parse_composition(obj) if ":" in obj else to_composition(obj)).islands
    islands = tuple(int(i) for i in obj)
    if any(i < 1 for i in islands):
        raise ValueError(f"island lengths must be >= 1, got {islands}")
    return islands


def run_type_of_set(positions: Iterable[int]) -> tuple[int, ...]:
    """Lengths of the maximal runs of consecutive integers in ``positions``."""
    ordered = sorted(set(positions))
    if not ordered:
        raise ValueError("run type of the empty set is undefined")
    if ordered[0] < 1:
        raise ValueError("positions must be positive integers")
    parts = [1]
    for prev, cur in zip(ordered, ordered[1:]):
        if cur == prev + 1:
            parts[-1] += 1
        else:
            parts.append(1)
    return tuple(parts)


def signature_from_index(n: int, idx: int) -> Signature:
    if n < 0:
        raise ValueError("signature length must be >= 0")
    if not 0 <= idx < (1 << n):
        raise ValueError(f"index {idx} out of range for N={n}")
    return tuple(1 if (idx >> (n - 1 - j)) & 1 else -1 for j in range(n))


def index_of_signature(sig: str | Sequence[int]) -> int:
    idx = 0
    for s in as_signature(sig):
        idx = (idx << 1) | (s > 0)
    return idx


def flip(sig: str | Sequence[int]) -> Signature:
    return tuple(-s for s in as_signature(sig))


def reverse(sig: str | Sequence[int]) -> Signature:
    return as_signature(sig)[::-1]


def all_signatures(n: int) -> Iterator[Signature]:
    """All ``2**n`` signatures in binary-index order."""
    for idx in range(1 << n):
        yield signature_from_index(n, idx)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` (ordered tuples of positive parts)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)
