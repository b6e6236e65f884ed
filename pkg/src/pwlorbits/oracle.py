"""Floating-point simulation of the two-branch map.

This is the empirical side of the package: iterate the map, detect the
attracting cycle, code it into symbols, and scan parameter ranges. Both
slopes lie in (0, 1), so the map is a global contraction on each branch and
the attractor is unique; starting every search from x = 0 loses nothing.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

from .interval import Params
from .symbolic import Pattern


def step(x: float, a: float, b: float, mu: float, l: float = -1.0) -> float:
    """One map application; the border x = 0 takes the left branch."""
    return a * x + mu if x <= 0.0 else b * x + mu + l


@dataclass(frozen=True)
class Regime:
    """Fixed-point census for one (mu, l) combination, cases 1 through 6."""

    case: int
    x_left: Fraction | None
    x_right: Fraction | None


def classify_regime(params: Params, mu) -> Regime:
    """Which fixed points exist, by the signs of mu and mu + l.

    For l > 0: case 1 (mu > 0, right fixed point), case 2 (-l < mu <= 0,
    both), case 3 (mu <= -l, left only). For l < 0: case 4 (mu <= 0, left),
    case 5 (0 < mu < -l, none: the orbit regime), case 6 (mu >= -l, right).
    Boundary values sit with the case whose fixed point survives the border
    collision there; at mu = -l < 0 the right fixed point is exactly on the
    border and is reported as case 6 with x_right = 0. A continuous map
    (l = 0) is split into cases 4 and 6 at mu = 0.
    """
    mu = Fraction(mu)
    l = params.l
    x_left = mu / (1 - params.a)
    x_right = (mu + l) / (1 - params.b)
    if l > 0:
        if mu > 0:
            return Regime(1, None, x_right)
        if mu > -l:
            return Regime(2, x_left, x_right)
        return Regime(3, x_left, None)
    if l < 0:
        if mu <= 0:
            return Regime(4, x_left, None)
        if mu < -l:
            return Regime(5, None, None)
        return Regime(6, None, x_right)
    return Regime(4, x_left, None) if mu <= 0 else Regime(6, None, x_right)


@dataclass(frozen=True)
class OrbitReport:
    """Detected attracting cycle (or the failure to find one).

    points holds one cycle starting at the state reached after the transient;
    pattern codes those points symbol by symbol. border_ambiguous marks
    cycles with a point within tol of the border, where the branch assignment
    is not float-decidable.
    """

    found: bool
    period: int
    points: tuple[float, ...]
    pattern: Pattern | None
    residual: float
    border_ambiguous: bool = False


def find_orbit(
    params: Params,
    mu,
    transient: int = 10_000,
    max_period: int = 512,
    tol: float = 1e-10,
) -> OrbitReport:
    """Iterate from x = 0 and report the attracting cycle.

    After the transient, looks for the smallest p <= max_period whose step-p
    displacement stays within tol over a full window of p steps. Non-orbit
    regimes simply come out as period 1. Returns found=False, period 0 when
    no candidate period qualifies.
    """
    a, b = float(params.a), float(params.b)
    mu_f, l = float(mu), float(params.l)
    x = 0.0
    for _ in range(transient):
        x = a * x + mu_f if x <= 0.0 else b * x + mu_f + l
    window = [x]
    for _ in range(2 * max_period):
        x = a * x + mu_f if x <= 0.0 else b * x + mu_f + l
        window.append(x)
    for p in range(1, max_period + 1):
        if all(abs(window[i + p] - window[i]) <= tol for i in range(p)):
            points = tuple(window[:p])
            residual = max(abs(window[i + p] - window[i]) for i in range(p))
            pattern = Pattern("".join("L" if y <= 0.0 else "R" for y in points))
            ambiguous = any(abs(y) <= tol for y in points)
            return OrbitReport(True, p, points, pattern, residual, ambiguous)
    return OrbitReport(False, 0, (), None, math.inf)


@dataclass(frozen=True)
class SweepRecord:
    mu: float
    period: int
    pattern: str
    residual: float
    flags: str


def sweep(
    params: Params,
    mu_lo: float,
    mu_hi: float,
    steps: int,
    transient: int = 10_000,
    max_period: int = 512,
    tol: float = 1e-10,
) -> list[SweepRecord]:
    """find_orbit on a uniform mu grid with both endpoints included."""
    if steps < 2:
        raise ValueError(f"need steps >= 2, got {steps}")
    if not mu_lo < mu_hi:
        raise ValueError(f"need mu_lo < mu_hi, got {mu_lo} >= {mu_hi}")
    records = []
    for i in range(steps):
        mu = mu_lo + (mu_hi - mu_lo) * i / (steps - 1)
        rep = find_orbit(params, mu, transient=transient, max_period=max_period, tol=tol)
        records.append(
            SweepRecord(
                mu=mu,
                period=rep.period,
                pattern=rep.pattern.word if rep.pattern else "",
                residual=rep.residual,
                flags="border_ambiguous" if rep.border_ambiguous else "",
            )
        )
    return records


def write_csv(records: list[SweepRecord], stream) -> None:
    """Emit sweep records as CSV: mu (12 significant digits), period, pattern, residual, flags."""
    writer = csv.writer(stream)
    writer.writerow(["mu", "period", "pattern", "residual", "flags"])
    for r in records:
        residual = f"{r.residual:.3e}" if math.isfinite(r.residual) else ""
        writer.writerow([f"{r.mu:.12g}", r.period, r.pattern, residual, r.flags])
