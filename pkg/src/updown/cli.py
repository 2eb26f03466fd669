"""Command-line interface: ``updown <verb> ...``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from collections.abc import Callable, Sequence
from fractions import Fraction

from . import poly
from .checks import SUITES, run_suite
from .compute import c_closed_form, c_distribution, c_recursion, c_triangle, clear_memo
from .congruence import (
    InadmissibleModulusError,
    is_prime,
    mod7_length8,
    mod9_length8,
    polynomial_predictor,
    predict_residue_prime,
    predict_residue_prime_minus_one,
    verify_congruence_sweep,
)
from .exact_numbers import factorial, format_decimal, format_fraction
from .oracle import ORACLE_CAP, OracleCapError, census, count_one
from .randomness import TIE_POLICIES, DataError, randomness_report, read_series
from .signatures import (
    Signature,
    format_signature,
    from_composition,
    parse_composition,
    parse_signature,
    signature_from_index,
    to_composition,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3
DUMP_ROW_GUARD = 16  # signature length above which dumps need --force
ALGORITHMS = ("recursion", "closed-form", "triangle", "phi", "oracle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _phi_count(sig: Signature) -> int:
    if not sig:
        return 1
    value = poly.evaluate(poly.c_polynomial(len(sig)), sig)
    return int(value)


def _run_algorithm(name: str, sig: Signature, force: bool) -> int:
    comp = to_composition(sig)
    if name == "recursion":
        return c_recursion(comp)
    if name == "closed-form":
        return c_closed_form(comp)
    if name == "triangle":
        return c_triangle(sig)
    if name == "phi":
        return _phi_count(sig)
    if name == "oracle":
        return count_one(sig, force=force)
    raise UsageError(f"unknown algorithm {name!r}")


def _parse_input(text: str) -> Signature:
    if ":" in text:
        return from_composition(parse_composition(text))
    return parse_signature(text)


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows if len(rows) != 1 else rows[0], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        for row in rows:
            width = max(map(len, row))
            for k, v in row.items():
                out.write(f"{k.ljust(width)}  {v}\n")
            if len(rows) > 1:
                out.write("\n")


def cmd_compute(args) -> int:
    sig = _parse_input(args.input)
    n = len(sig)
    names = list(ALGORITHMS) if args.all else [args.algorithm]
    values: dict[str, int] = {}
    notes = []
    for name in names:
        if name == "oracle" and n > ORACLE_CAP and not args.force:
            if args.all:
                notes.append(f"oracle skipped (N > {ORACLE_CAP}; use --force)")
                continue
            raise OracleCapError(f"oracle refuses N={n} > {ORACLE_CAP} without --force")
        values[name] = _run_algorithm(name, sig, args.force)
    distinct = set(values.values())
    c = next(iter(values.values()))
    p = Fraction(c, factorial(n + 1))
    row = {
        "signature": format_signature(sig),
        "islands": str(to_composition(sig)),
        "N": n,
        "C": c,
        "P": format_fraction(p),
        "P_decimal": format_decimal(p),
    }
    if args.all:
        row.update({f"C[{k}]": v for k, v in values.items()})
        row["agree"] = len(distinct) == 1
        if notes:
            row["notes"] = "; ".join(notes)
    _emit([row], args.format, sys.stdout)
    if len(distinct) != 1:
        print(f"algorithms disagree: {values}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _open_out(path: str | None):
    return open(path, "w", newline="") if path else sys.stdout


def cmd_dump(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("N must be >= 1")
    if n > DUMP_ROW_GUARD and not args.force:
        raise UsageError(f"N={n} would write {2**n} rows; pass --force")
    if args.engine == "oracle":
        counts = list(census(n, force=args.force, workers=args.threads).counts)
    elif args.engine == "recursion":
        counts = c_distribution(n, args.threads)
    elif args.engine == "phi":
        cn = poly.c_polynomial(n)
        counts = [int(poly.evaluate(cn, signature_from_index(n, i))) for i in range(1 << n)]
    else:
        counts = [c_triangle(signature_from_index(n, i)) for i in range(1 << n)]
    denom = factorial(n + 1)
    out = _open_out(args.output)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["index", "signature", "C", "P", "P_decimal"])
        for idx, c in enumerate(counts):
            p = Fraction(c, denom)
            writer.writerow([idx, format_signature(signature_from_index(n, idx)), c, format_fraction(p), format_decimal(p)])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _choose_predictor(n: int, m: int, kind: str) -> tuple[str, Callable[[Signature], int]]:
    if kind == "auto":
        if m > 2 and is_prime(m) and n in (m - 1, m):
            kind = "prime"
        elif n == 8 and m in (7, 9):
            kind = f"mod{m}"
        else:
            kind = "polynomial"
    if kind == "prime":
        if not (m > 2 and is_prime(m) and n in (m - 1, m)):
            raise UsageError("the prime predictor needs an odd prime modulus p with N = p - 1 or N = p")
        if n == m - 1:
            return kind, lambda s: predict_residue_prime_minus_one(s, m)
        return kind, lambda s: predict_residue_prime(s, m)
    if kind in ("mod9", "mod7"):
        if n != 8 or m != int(kind[3:]):
            raise UsageError(f"the {kind} formula applies to N=8, modulus {kind[3:]}")
        return kind, mod9_length8 if kind == "mod9" else mod7_length8
    return "polynomial", polynomial_predictor(n, m)


def cmd_congruence(args) -> int:
    n, m = args.n, args.modulus
    if m < 2 or n < 1:
        raise UsageError("need N >= 1 and modulus >= 2")
    if n > DUMP_ROW_GUARD and not args.force:
        raise UsageError(f"N={n} sweeps {2**n} signatures; pass --force")
    kind, predictor = _choose_predictor(n, m, args.predictor)
    report = verify_congruence_sweep(n, m, predictor, args.threads)
    summary = {
        "N": n,
        "modulus": m,
        "predictor": kind,
        "signatures": len(report.rows),
        "violations": len(report.violations),
        "residues": sorted(report.residues),
        "histogram": {str(k): v for k, v in sorted(report.histogram.items())},
    }
    if args.format == "csv" or args.output:
        out = _open_out(args.output)
        try:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["index", "signature", "residue_actual", "residue_predicted"])
            for r in report.rows:
                writer.writerow([r.index, format_signature(r.signature), r.actual, r.predicted])
        finally:
            if out is not sys.stdout:
                out.close()
    summary_out = sys.stderr if (args.format == "csv" and not args.output) else sys.stdout
    if args.format == "json":
        json.dump(summary, summary_out, indent=2)
        summary_out.write("\n")
    else:
        print(
            f"N={n} mod {m} [{kind}]: {summary['signatures']} signatures, "
            f"{summary['violations']} violations, residues {summary['residues']}",
            file=summary_out,
        )
    return EXIT_VERIFY if report.violations else EXIT_OK


def cmd_randomtest(args) -> int:
    series = read_series(args.csv, args.column)
    report = randomness_report(series, args.tie_policy, args.seed, args.threshold)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        _emit([report.to_dict()], "csv", sys.stdout)
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if not args.suites or args.suites == ["all"] else args.suites
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    results = [run_suite(name, args.threads) for name in names]
    if args.format == "json":
        print(json.dumps({"passed": all(r.passed for r in results), "suites": [r.to_dict() for r in results]}, indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name}: {r.checked} checked, {len(r.failures)} failures, {r.seconds:.3f}s")
            for f in r.failures[:10]:
                print(f"    {f}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise UsageError(f"bad N range {text!r}; use e.g. 1:9") from None


BENCH_FULL_LIMIT = 12  # up to here every signature is benchmarked
BENCH_SAMPLE = 64


def _bench_signatures(n: int, seed: int | None) -> list[Signature]:
    if n <= BENCH_FULL_LIMIT:
        return [signature_from_index(n, i) for i in range(1 << n)]
    rng = random.Random(0 if seed is None else seed)
    idxs = sorted({0, (1 << n) - 1, int("10" * (n // 2) + "1" * (n % 2), 2)} | {rng.randrange(1 << n) for _ in range(BENCH_SAMPLE)})
    return [signature_from_index(n, i) for i in idxs]


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algorithms.split(",")] if args.algorithms != "all" else list(ALGORITHMS)
    for a in algos:
        if a not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {ALGORITHMS}")
    rows = []
    for n in _parse_range(args.n):
        if n < 1:
            raise UsageError("N must be >= 1")
        sigs = _bench_signatures(n, args.seed)
        active = [a for a in algos if a != "oracle" or n <= ORACLE_CAP or args.force]
        results: dict[str, list[int]] = {}
        timings: dict[str, float] = {}
        for a in active:
            if a == "recursion":
                clear_memo()
            if a == "phi":
                poly.phi.cache_clear()
                poly.c_polynomial.cache_clear()
            if a == "oracle" and len(sigs) == 1 << n:
                start = time.perf_counter()
                values = list(census(n, force=args.force).counts)
                timings[a] = time.perf_counter() - start
            else:
                start = time.perf_counter()
                values = [_run_algorithm(a, s, args.force) for s in sigs]
                timings[a] = time.perf_counter() - start
            results[a] = values
        reference = next(iter(results.values()))
        disagree = [a for a, v in results.items() if v != reference]
        if disagree:
            print(f"N={n}: algorithms {disagree} disagree with {active[0]}", file=sys.stderr)
            return EXIT_VERIFY
        phi_terms = len(poly.c_polynomial(n)) if "phi" in active else ""
        for a in active:
            rows.append({"N": n, "algorithm": a, "signatures": len(sigs), "seconds": f"{timings[a]:.6f}", "phi_terms": phi_terms})
    if not rows:
        raise UsageError("nothing to benchmark")
    if args.format in ("csv", "json"):
        _emit(rows, args.format, sys.stdout)
    else:
        print(f"{'N':>3} {'algorithm':<12} {'sigs':>6} {'seconds':>12} {'phi_terms':>10}")
        for r in rows:
            print(f"{r['N']:>3} {r['algorithm']:<12} {r['signatures']:>6} {r['seconds']:>12} {r['phi_terms']!s:>10}")
    return EXIT_OK


def cmd_phi(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("N must be >= 1")
    p = poly.c_polynomial(n) if args.c or args.doubled else poly.phi(n)
    if args.doubled:
        p = p.scale(2)
    out = io.StringIO()
    if args.gamma:
        expansion = poly.gamma_expansion(p)
        for rt in sorted(expansion, key=lambda t: (sum(t), len(t), t)):
            out.write(f"{_coef(expansion[rt])}\t{','.join(map(str, rt))}\n")
    else:
        for pos, coef in p.sorted_terms():
            out.write(f"{_coef(coef)}\t{','.join(map(str, pos))}\n")
    sys.stdout.write(out.getvalue())
    return EXIT_OK


def _coef(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--force", action="store_true", help="lift size guards and the oracle cap")
    common.add_argument("--threads", type=int, default=1, metavar="K", help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=None, help="seed for jitter tie-breaking and bench sampling")

    parser = _Parser(prog="updown", description="Exact up-down permutation numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="C and P of one signature")
    p.add_argument("input", help="signature like '--+-+' or composition like '+:2,3,1'")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="recursion")
    p.add_argument("--all", action="store_true", help="run every algorithm and check agreement")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("dump", parents=[common], help="CSV of C and P over all signatures of length N")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("-o", "--output")
    p.add_argument("--engine", choices=("recursion", "phi", "triangle", "oracle"), default="recursion")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("congruence", parents=[common], help="residue table and violation count")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("modulus", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--predictor", choices=("auto", "prime", "polynomial", "mod9", "mod7"), default="auto")
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("randomtest", parents=[common], help="up-down randomness test on a CSV column")
    p.add_argument("csv")
    p.add_argument("--column", required=True, help="header name or 0-based index")
    p.add_argument("--tie-policy", choices=TIE_POLICIES, default="error")
    p.add_argument("--threshold", type=float, default=None, help="log2 threshold for the bound certificate")
    p.set_defaults(func=cmd_randomtest)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suites", nargs="*", help=f"any of {', '.join(SUITES)} or 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time the algorithms against each other")
    p.add_argument("--n", default="1:9", help="range of N, e.g. 1:9 or 20")
    p.add_argument("--algorithms", default="all", help="comma list or 'all'")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("phi", parents=[common], help="dump the universal polynomial (or c_N) term by term")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--c", action="store_true", help="dump c_N instead of Phi_N")
    p.add_argument("--doubled", action="store_true", help="dump 2 c_N")
    p.add_argument("--gamma", action="store_true", help="group terms into gamma series")
    p.set_defaults(func=cmd_phi)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OracleCapError) as exc:
        print(f"updown: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, InadmissibleModulusError, ValueError, OSError) as exc:
        print(f"updown: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
