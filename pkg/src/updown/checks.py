"""Named verification suites behind ``updown verify``."""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field

from .bounds import bound_report, complementary_bound_check
from .compute import c_closed_form, c_recursion, c_triangle, even_rise_count, quadratic_check
from .congruence import (
    mod7_length8,
    mod9_length8,
    predict_residue_prime,
    predict_residue_prime_minus_one,
    verify_congruence_sweep,
)
from .oracle import census
from .poly import c_polynomial, evaluate, gamma_expansion, phi, zero_substitution
from .signatures import all_signatures, compositions, format_signature, to_composition
from .table1 import table1_values

__all__ = ["SuiteResult", "SUITES", "run_suite"]

PHI8_DOUBLED_C = {
    (): 2835, (2,): -945, (4,): 378, (2, 2): 315, (6,): -153,
    (2, 4): -126, (4, 2): -126, (2, 2, 2): -105, (8,): 62,
}  # fmt: skip


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:50],
            "failure_count": len(self.failures),
            "seconds": round(self.seconds, 3),
        }


def _table1(r: SuiteResult, workers: int) -> None:
    for sig, expected in sorted(table1_values().items(), key=lambda kv: (len(kv[0]), kv[0])):
        comp = to_composition(sig)
        got = {
            "recursion": c_recursion(comp),
            "closed-form": c_closed_form(comp),
            "triangle": c_triangle(sig),
            "phi": evaluate(c_polynomial(len(sig)), sig),
        }
        bad = {k: v for k, v in got.items() if v != expected}
        r.check(not bad, f"{sig}: expected {expected}, got {bad}")


def _phi8(r: SuiteResult, workers: int) -> None:
    got = gamma_expansion(c_polynomial(8).scale(2))
    for run_type, coef in PHI8_DOUBLED_C.items():
        r.check(got.get(run_type) == coef, f"2c_8 gamma{run_type}: expected {coef}, got {got.get(run_type)}")
    extra = set(got) - set(PHI8_DOUBLED_C)
    if extra:
        r.failures.append(f"unexpected gamma terms {sorted(extra)}")


def _congruences(r: SuiteResult, workers: int) -> None:
    for p in (3, 5, 7, 11, 13):
        for n, pred in ((p - 1, predict_residue_prime_minus_one), (p, predict_residue_prime)):
            rep = verify_congruence_sweep(n, p, lambda s, pred=pred, p=p: pred(s, p), workers)
            allowed = {1, p - 1} if n == p - 1 else {0, 1, p - 1}
            r.check(not rep.violations, f"N={n} mod {p}: {len(rep.violations)} violations")
            r.check(rep.residues <= allowed, f"N={n} mod {p}: residues {sorted(rep.residues)}")
    rep9 = verify_congruence_sweep(8, 9, mod9_length8, workers)
    r.check(not rep9.violations, f"N=8 mod 9: {len(rep9.violations)} violations")
    r.check(rep9.residues <= {1, 2, 7, 8}, f"N=8 mod 9 residues {sorted(rep9.residues)}")
    rep7 = verify_congruence_sweep(8, 7, mod7_length8, workers)
    r.check(not rep7.violations, f"N=8 mod 7: {len(rep7.violations)} violations")


def _bounds(r: SuiteResult, workers: int) -> None:
    for n in range(1, 15):
        for comp in compositions(n):
            rep = bound_report(comp)
            r.check(rep.satisfied, f"{comp}: P={rep.exact_p} > bound={rep.bound}")
            tight = rep.exact_p == rep.bound
            r.check(tight == (len(comp) == 2), f"{comp}: equality={tight} with {len(comp)} islands")
    for total in range(0, 9):
        for k in range(total + 1):
            for rho in all_signatures(k):
                for tau in all_signatures(total - k):
                    left, right = complementary_bound_check(rho, tau)
                    r.check(left <= right, f"complementary {format_signature(rho)}|{format_signature(tau)}")


def _identity_sweeps(r: SuiteResult, workers: int) -> None:
    for n in range(1, 10):
        cen = census(n, workers=workers)
        cn = c_polynomial(n)
        for sig, count in cen.items():
            text = format_signature(sig)
            r.check(c_recursion(text) == count, f"recursion {text}")
            r.check(c_closed_form(text) == count, f"closed form {text}")
            r.check(c_triangle(sig) == count, f"triangle {text}")
            r.check(evaluate(cn, sig) == count, f"phi {text}")
    for n in range(1, 13):
        total = sum(c_recursion(to_composition(s)) for s in all_signatures(n) if _sign_product(s) == 1)
        r.check(total == even_rise_count(n), f"E_{n + 1}")
    for total in range(0, 9):
        for k in range(total + 1):
            for sigma in all_signatures(k):
                for mu in all_signatures(total - k):
                    left, right = quadratic_check(sigma, mu)
                    r.check(left == right, f"quadratic {format_signature(sigma)}|{format_signature(mu)}")
    for n in range(1, 10):
        for sig in all_signatures(n):
            lhs = evaluate(phi(n), sig)
            rhs = (evaluate(phi(n + 1), (*sig, 1)) + evaluate(phi(n + 1), (*sig, -1))) / 2
            r.check(lhs == rhs, f"self-similarity {format_signature(sig)}")
    for n in range(2, 11):
        for k in range(1, n + 1):
            lhs = zero_substitution(phi(n), k)
            rhs = phi(k - 1) * phi(n - k).shift(k)
            r.check(lhs == rhs, f"zero substitution N={n}, n={k}")


def _sign_product(s) -> int:
    out = 1
    for v in s:
        out *= v
    return out


SUITES: dict[str, Callable[[SuiteResult, int], None]] = {
    "table1": _table1,
    "phi8": _phi8,
    "congruences": _congruences,
    "bounds": _bounds,
    "identity-sweeps": _identity_sweeps,
}


def run_suite(name: str, workers: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    result = SuiteResult(name)
    start = time.perf_counter()
    SUITES[name](result, workers)
    result.seconds = time.perf_counter() - start
    return result

