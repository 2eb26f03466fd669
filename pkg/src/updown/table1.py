"""Published up-down numbers for signatures of length 1 to 5.

Only the first half of the length-5 column is printed in the source table;
:func:`table1_values` completes it by flip symmetry, giving 62 values.
"""

from __future__ import annotations

from .signatures import flip, format_signature

PRINTED: dict[str, int] = {
    "-": 1, "+": 1,
    "--": 1, "-+": 2, "+-": 2, "++": 1,
    "---": 1, "--+": 3, "-+-": 5, "-++": 3, "+--": 3, "+-+": 5, "++-": 3, "+++": 1,
    "----": 1, "---+": 4, "--+-": 9, "--++": 6, "-+--": 9, "-+-+": 16, "-++-": 11, "-+++": 4,
    "+---": 4, "+--+": 11, "+-+-": 16, "+-++": 9, "++--": 6, "++-+": 9, "+++-": 4, "++++": 1,
    "-----": 1, "----+": 5, "---+-": 14, "---++": 10, "--+--": 19, "--+-+": 35, "--++-": 26,
    "--+++": 10, "-+---": 14, "-+--+": 40, "-+-+-": 61, "-+-++": 35, "-++--": 26, "-++-+": 40,
    "-+++-": 19, "-++++": 5,
}  # fmt: skip


def table1_values() -> dict[str, int]:
    out = dict(PRINTED)
    for sig, c in PRINTED.items():
        out.setdefault(format_signature(flip(sig)), c)
    return out
