"""End-to-end cross-validation: analytic intervals vs generation vs simulation.

Each check pits two independent routes against each other (closed form vs
constraint solver, block recursion vs brute-force enumeration, exact interval
vs float simulation). The CLI verify command drives run_verify and turns its
outcome into an exit status.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import oracle, patterngen, renorm
from .interval import (
    Params,
    atomic_interval_L,
    atomic_interval_R,
    geom_sum,
    is_admissible,
    molecular_pair_interval,
    mu_interval,
)
from .patterngen import DEFAULT_BRUTE_CEILING
from .symbolic import Pattern, dual


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def random_params(rng: random.Random, max_den: int = 40) -> Params:
    def slope() -> Fraction:
        den = rng.randint(3, max_den)
        return Fraction(rng.randint(1, den - 1), den)

    return Params(slope(), slope())


def _all_admissible_classes(n_max: int) -> list[Pattern]:
    out: list[Pattern] = []
    for n in range(2, n_max + 1):
        out.extend(sorted(patterngen.generate_period(n).classes(), key=str))
    return out


def check_theorem_counts(n_max: int, param_sets: list[Params]) -> CheckResult:
    """Brute-force classes equal generated classes and number phi(n)."""
    tried = 0
    for n in range(2, min(n_max, DEFAULT_BRUTE_CEILING) + 1):
        expected = patterngen.generate_period(n).classes()
        if len(expected) != patterngen.euler_phi(n):
            return CheckResult("theorem_counts", False, f"generator miscounts at n={n}")
        for params in param_sets:
            got = patterngen.exhaustive_admissible(n, params)
            tried += 1
            if got != expected:
                return CheckResult(
                    "theorem_counts", False, f"mismatch at n={n}, params={params}"
                )
    return CheckResult("theorem_counts", True, f"{tried} period/param combinations")


def check_closed_forms(n_max: int, param_sets: list[Params]) -> CheckResult:
    """Closed-form intervals equal the constraint solver, endpoint for endpoint."""
    tried = 0
    for params in param_sets:
        for n in range(1, n_max + 1):
            pairs = [
                (atomic_interval_L(n, params), Pattern("L" * n + "R")),
                (atomic_interval_R(n, params), Pattern("L" + "R" * n)),
            ]
            if n >= 2:
                pairs.append(
                    (molecular_pair_interval(n, params), Pattern("L" * n + "R" + "L" * (n - 1) + "R"))
                )
            for closed, pattern in pairs:
                solved = mu_interval(pattern, params)
                tried += 1
                if (closed.lo, closed.hi) != (solved.lo, solved.hi):
                    return CheckResult(
                        "closed_forms", False, f"{pattern.word} at n={n}, params={params}"
                    )
    return CheckResult("closed_forms", True, f"{tried} closed-form comparisons")


def check_region_ordering(n_max: int, param_sets: list[Params]) -> CheckResult:
    """Band endpoints interleave: a^n/S_n < a^(n-1)/(a^(n-1) b + S_(n-1)) < a^(n-1)/S_(n-1)."""
    tried = 0
    for params in param_sets:
        a, b = params.a, params.b
        for n in range(2, n_max + 1):
            lo = a**n / geom_sum(a, n)
            mid = a ** (n - 1) / (a ** (n - 1) * b + geom_sum(a, n - 1))
            hi = a ** (n - 1) / geom_sum(a, n - 1)
            tried += 1
            if not lo < mid < hi:
                return CheckResult("region_ordering", False, f"n={n}, params={params}")
    return CheckResult("region_ordering", True, f"{tried} boundary triples")


def check_duality(n_max: int, param_sets: list[Params]) -> CheckResult:
    """Endpoints of the dual class under swapped slopes are 1 - hi, 1 - lo."""
    classes = _all_admissible_classes(n_max)
    tried = 0
    for params in param_sets:
        for p in classes:
            iv = mu_interval(p, params)
            div = mu_interval(dual(p), params.swapped())
            tried += 1
            if div.lo != 1 - iv.hi or div.hi != 1 - iv.lo:
                return CheckResult("duality", False, f"{p.word} under {params}")
    return CheckResult("duality", True, f"{tried} pattern/param pairs")


def check_renorm_roundtrip(n_max: int, param_sets: list[Params]) -> CheckResult:
    """pattern_at at each interval midpoint returns the interval's own pattern."""
    classes = _all_admissible_classes(n_max)
    tried = 0
    for params in param_sets:
        for p in classes:
            mid = mu_interval(p, params).midpoint()
            got = renorm.pattern_at(params, mid)
            tried += 1
            if not got.cyclic_eq(p):
                return CheckResult(
                    "renorm_roundtrip", False, f"{p.word} -> {got.word} under {params}"
                )
    return CheckResult("renorm_roundtrip", True, f"{tried} midpoint descents")


def check_oracle_concordance(n_max: int, param_sets: list[Params]) -> CheckResult:
    """Simulation at each interval midpoint reproduces pattern and period."""
    classes = _all_admissible_classes(n_max)
    tried = 0
    for params in param_sets:
        for p in classes:
            mid = mu_interval(p, params).midpoint()
            rep = oracle.find_orbit(params, mid)
            tried += 1
            if not (rep.found and rep.period == len(p) and rep.pattern.cyclic_eq(p)):
                return CheckResult(
                    "oracle_concordance", False, f"{p.word} under {params}"
                )
            if rep.residual > 1e-10:
                return CheckResult(
                    "oracle_concordance", False, f"residual {rep.residual} for {p.word}"
                )
    return CheckResult("oracle_concordance", True, f"{tried} simulated midpoints")


def check_negative_controls(param_sets: list[Params]) -> CheckResult:
    """Known bad words stay inadmissible: mixed adjacencies, repetitions, bad block stacking."""
    bad = [
        Pattern("LLRR"),
        Pattern("LLRLRRLR"),
        Pattern("LLRLLR"),
        Pattern("LLRLLRLR" + "LLRLR" + "LLRLR" + "LLRLLRLR"),
    ]
    tried = 0
    for params in param_sets:
        for p in bad:
            tried += 1
            if is_admissible(p, params):
                return CheckResult("negative_controls", False, f"{p.word} under {params}")
    return CheckResult("negative_controls", True, f"{tried} rejections")


def run_verify(n_max: int = 10, pairs: int = 3, seed: int = 7, out=print) -> bool:
    """Run every cross-check and report one PASS/FAIL line per check."""
    rng = random.Random(seed)
    param_sets = [Params(Fraction(1, 2), Fraction(1, 3))]
    param_sets += [random_params(rng) for _ in range(max(0, pairs - 1))]
    results = [
        check_theorem_counts(min(n_max, 12), param_sets),
        check_closed_forms(min(n_max, 12), param_sets),
        check_region_ordering(50, param_sets),
        check_duality(min(n_max, 10), param_sets),
        check_renorm_roundtrip(min(n_max, 10), param_sets),
        check_oracle_concordance(min(n_max, 10), param_sets[:2]),
        check_negative_controls(param_sets),
    ]
    for r in results:
        out(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}")
    passed = sum(r.ok for r in results)
    out(f"{passed}/{len(results)} checks passed")
    return passed == len(results)
