"""Exact existence intervals for periodic orbit patterns.

The map is x -> a*x + mu on x <= 0 and x -> b*x + mu + l on x > 0, with both
slopes in (0, 1). For l = -1 and 0 < mu < 1 the attractor is a periodic orbit
whose symbol pattern depends on mu; each pattern is realized exactly on a
half-open interval (mu1, mu2] of the parameter. Everything in this module is
computed over fractions.Fraction: nothing rounds, so endpoint membership in
the half-open intervals is decidable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateConstraint, UniformPattern
from .symbolic import Pattern, is_primitive

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+|\d+/\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a plain decimal literal into an exact Fraction.

    Decimal literals are expanded digit by digit (0.85 -> 17/20), never
    round-tripped through float. Scientific notation is rejected.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a plain rational literal: {text!r}")
    return Fraction(s)


def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Params:
    """Map constants. Both slopes must lie in (0, 1); orbit analysis fixes l = -1."""

    a: Fraction
    b: Fraction
    l: Fraction = Fraction(-1)

    def __post_init__(self) -> None:
        for name in ("a", "b", "l"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (0 < self.a < 1 and 0 < self.b < 1):
            raise ValueError(f"slopes must lie in (0, 1): a={self.a}, b={self.b}")

    def swapped(self) -> "Params":
        return Params(self.b, self.a, self.l)


def _require_orbit_regime(params: Params, who: str) -> None:
    if params.l != -1:
        raise ValueError(f"{who} requires l = -1, got l = {params.l}")


@dataclass(frozen=True)
class MuInterval:
    """Half-open parameter interval (lo, hi]; empty when lo >= hi."""

    lo: Fraction
    hi: Fraction

    @property
    def empty(self) -> bool:
        return self.lo >= self.hi

    def contains(self, mu) -> bool:
        return not self.empty and self.lo < mu <= self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo if not self.empty else Fraction(0)

    def to_json(self) -> dict:
        return {
            "lo": rational_str(self.lo),
            "hi": rational_str(self.hi),
            "lo_open": True,
            "hi_open": False,
            "empty": self.empty,
        }

    def __str__(self) -> str:
        if self.empty:
            return "empty"
        return f"({self.lo}, {self.hi}]"


EMPTY_INTERVAL = MuInterval(Fraction(0), Fraction(0))


def geom_sum(k: Fraction, n: int) -> Fraction:
    """Sum 1 + k + k^2 + ... + k^n, with the empty-sum convention n = -1 -> 0."""
    if n < -1:
        raise ValueError(f"geom_sum needs n >= -1, got {n}")
    k = Fraction(k)
    if k == 1:
        return Fraction(n + 1)
    return (1 - k ** (n + 1)) / (1 - k)


@dataclass(frozen=True)
class AffineTrace:
    """Coefficients of x_i = alpha_i * x0 + beta_i * mu + gamma_i along one period."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]

    @property
    def steps(self) -> int:
        return len(self.alpha) - 1


def trace(p: Pattern, params: Params) -> AffineTrace:
    """Compose the branch maps along the pattern, keeping x_i affine in (x0, mu).

    Index 0 is the identity; index i+1 applies the branch selected by symbol i
    (slope a, offset 0 for L; slope b, offset l for R).
    """
    a, b, l = params.a, params.b, params.l
    zero = Fraction(0)
    alpha, beta, gamma = [Fraction(1)], [zero], [zero]
    for sym in p:
        c, d = (a, zero) if sym == "L" else (b, l)
        alpha.append(c * alpha[-1])
        beta.append(c * beta[-1] + 1)
        gamma.append(c * gamma[-1] + d)
    return AffineTrace(tuple(alpha), tuple(beta), tuple(gamma))


def solve_x0(p: Pattern, params: Params) -> tuple[Fraction, Fraction]:
    """Close the period (x_n = x_0) and return (u, v) with x0(mu) = u*mu + v.

    The closure is always solvable: alpha_n is a product of slopes in (0, 1),
    so 1 - alpha_n > 0.
    """
    if len(p) < 2:
        raise ValueError("periodic closure needs at least two symbols")
    t = trace(p, params)
    denom = 1 - t.alpha[-1]
    return t.beta[-1] / denom, t.gamma[-1] / denom


@dataclass(frozen=True)
class Bound:
    """One positional inequality solved for mu.

    kind is "upper" for an L position (x_i <= 0, bound attained) and "lower"
    for an R position (x_i > 0, bound excluded).
    """

    position: int
    value: Fraction
    kind: str


def _position_bounds(p: Pattern, params: Params) -> list[Bound]:
    u, v = solve_x0(p, params)
    t = trace(p, params)
    bounds = []
    for i, sym in enumerate(p):
        coeff = t.alpha[i] * u + t.beta[i]
        const = t.alpha[i] * v + t.gamma[i]
        if coeff == 0:
            satisfied = const <= 0 if sym == "L" else const > 0
            if not satisfied:
                raise DegenerateConstraint(
                    f"position {i} fixes {const} {'<= 0' if sym == 'L' else '> 0'}"
                )
            continue
        if coeff < 0:
            # cannot happen for slopes in (0, 1): alpha, beta >= 0 and u > 0
            raise ValueError(f"negative mu-coefficient at position {i}")
        bounds.append(Bound(i, -const / coeff, "upper" if sym == "L" else "lower"))
    return bounds


def _check_mixed(p: Pattern, who: str) -> None:
    if "L" not in p.word or "R" not in p.word:
        raise UniformPattern(f"{who} needs both symbols, got {p.word!r}")


def mu_interval(p: Pattern, params: Params) -> MuInterval:
    """Exact existence interval (mu1, mu2] of the orbit pattern p.

    Substitutes the closed-period x0(mu) into every positional inequality;
    each becomes a single bound on mu. mu2 is the least upper bound, mu1 the
    greatest lower bound, both clamped to the orbit-bearing range 0 < mu < 1.
    Empty iff mu1 >= mu2.
    """
    _require_orbit_regime(params, "mu_interval")
    _check_mixed(p, "mu_interval")
    try:
        bounds = _position_bounds(p, params)
    except DegenerateConstraint:
        return EMPTY_INTERVAL
    lo = max((b.value for b in bounds if b.kind == "lower"), default=Fraction(0))
    hi = min((b.value for b in bounds if b.kind == "upper"), default=Fraction(1))
    return MuInterval(max(lo, Fraction(0)), min(hi, Fraction(1)))


def atomic_interval_L(n: int, params: Params) -> MuInterval:
    """Closed-form interval for the single-R pattern L^n R (n >= 1); never empty."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    _require_orbit_regime(params, "atomic_interval_L")
    a, b = params.a, params.b
    lo = a**n / geom_sum(a, n)
    hi = a ** (n - 1) / (a ** (n - 1) * b + geom_sum(a, n - 1))
    return MuInterval(lo, hi)


def atomic_interval_R(n: int, params: Params) -> MuInterval:
    """Closed-form interval for the single-L pattern L R^n (n >= 1); never empty."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    _require_orbit_regime(params, "atomic_interval_R")
    a, b = params.a, params.b
    lo = (a * b ** (n - 1) + geom_sum(b, n - 2)) / (a * b ** (n - 1) + geom_sum(b, n - 1))
    hi = geom_sum(b, n - 1) / geom_sum(b, n)
    return MuInterval(lo, hi)


def molecular_pair_interval(n: int, params: Params) -> MuInterval:
    """Closed-form interval for the two-block pattern L^n R L^(n-1) R (n >= 2).

    Lies strictly inside the band between the intervals of L^n R and
    L^(n-1) R, so the interval ordering on the mu line is not monotone in
    the period.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    _require_orbit_regime(params, "molecular_pair_interval")
    a, b = params.a, params.b
    s = geom_sum(a, n - 1)
    lo = (a ** (2 * n - 1) * b + a ** (n - 1)) / (a ** (2 * n - 1) * b + (a ** (n - 1) * b + 1) * s)
    hi = (a ** (2 * n - 2) * b + a ** (n - 1)) / (a ** (2 * n - 2) * b**2 + (a ** (n - 1) * b + 1) * s)
    return MuInterval(lo, hi)


def is_admissible(p: Pattern, params: Params) -> bool:
    """True iff some mu realizes p: p is primitive and its interval is non-empty.

    A non-primitive word collapses onto the orbit of its repeating factor, so
    primitivity is checked first and uniform words of length >= 2 come out
    False without touching the solver.
    """
    if not is_primitive(p):
        return False
    return not mu_interval(p, params).empty


@dataclass(frozen=True)
class BoundLocations:
    """Positions whose inequalities attain mu1 and mu2, plus the full bound list."""

    idx_mu1: int
    idx_mu2: int
    bounds: tuple[Bound, ...]


def bound_locations(p: Pattern, params: Params) -> BoundLocations:
    """Locate the tight lower and upper bound by full enumeration.

    Requires a non-empty interval. For an admissible pattern the attaining
    positions are unique and coincide with the R that the minimal rotation
    places last and the L that the maximal rotation places last.
    """
    _require_orbit_regime(params, "bound_locations")
    _check_mixed(p, "bound_locations")
    iv = mu_interval(p, params)
    if iv.empty:
        raise ValueError(f"{p.word!r} has an empty interval; no bound locations")
    bounds = _position_bounds(p, params)
    idx_mu1 = max((b for b in bounds if b.kind == "lower"), key=lambda b: b.value).position
    idx_mu2 = min((b for b in bounds if b.kind == "upper"), key=lambda b: b.value).position
    return BoundLocations(idx_mu1, idx_mu2, tuple(bounds))
