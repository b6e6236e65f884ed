"""Renormalization: locate the orbit pattern realized at a given mu.

The unit mu-range splits into an alternating sequence of bands. Atomic bands
carry the single-R patterns L^n R (small mu) and the single-L patterns L R^m
(large mu); between two neighbouring atomic bands sits a mixed band whose
patterns combine the two adjacent block types. On a mixed band the
first-return map over one block is again a two-branch affine map of the same
shape, so after shifting its border to zero and rescaling the offset to -1
the search continues one level down with blocks in place of symbols. The
descent ends when some level lands in an atomic band.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .errors import DepthExceeded, NotMolecular, OutOfOrbitRange
from .interval import Params, atomic_interval_L, atomic_interval_R, geom_sum
from .symbolic import Pattern


@dataclass(frozen=True)
class RegionTag:
    """Classification of mu on one renormalization level.

    kind "atomic" with side "L" means mu sits in the interval of L^n R; side
    "R" means L R^n. kind "molecular" is the mixed band directly *below* the
    atomic band of the same (side, n): on side L it carries blocks L^n R and
    L^(n-1) R, on side R blocks L R^n and L R^(n-1). kind "out" covers
    mu outside (0, 1), where only fixed points (or no orbit at all) exist.
    """

    kind: str  # "atomic" | "molecular" | "out"
    side: str | None = None  # "L" | "R"
    n: int | None = None

    def describe(self) -> str:
        if self.kind == "out":
            return "out-of-range"
        if self.kind == "atomic":
            word = "L" * self.n + "R" if self.side == "L" else "L" + "R" * self.n
            return f"atomic {word}"
        if self.side == "L":
            return f"molecular band: blocks L^{self.n}R / L^{self.n - 1}R"
        return f"molecular band: blocks LR^{self.n} / LR^{self.n - 1}"


OUT_OF_RANGE = RegionTag("out")


def classify_region(params: Params, mu) -> RegionTag:
    """Locate mu in the alternating atomic/mixed decomposition of (0, 1).

    All bands are half-open (lo, hi] like the intervals they bound, so every
    mu in (0, 1) gets exactly one tag. The scan walks the band endpoints,
    which shrink monotonically to 0 on the L side and grow to 1 on the R side.
    """
    if params.l != -1:
        raise ValueError(f"classify_region requires l = -1, got {params.l}")
    mu = Fraction(mu)
    if not 0 < mu < 1:
        return OUT_OF_RANGE
    if mu <= atomic_interval_L(1, params).hi:
        for n in count(1):
            iv = atomic_interval_L(n, params)
            if n >= 2 and mu > iv.hi:
                return RegionTag("molecular", "L", n)
            if mu > iv.lo:
                return RegionTag("atomic", "L", n)
    for m in count(2):
        iv = atomic_interval_R(m, params)
        if mu <= iv.lo:
            return RegionTag("molecular", "R", m)
        if mu <= iv.hi:
            return RegionTag("atomic", "R", m)
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class InducedMap:
    """First-return map over one block on a mixed band, border shifted to zero.

    a_t and b_t are the left/right branch slopes (compositions of the block
    maps, hence again in (0, 1)); mu_t and l_t the raw offsets; x_new the
    border in the unshifted coordinate; mu_bar and l_bar the offsets after
    the shift. Inside the open band 0 < mu_bar < -l_bar, the same offset
    condition the original map needs for orbits; at the included top edge of
    the band mu_bar = -l_bar exactly and the descent has no orbit to find.
    """

    a_t: Fraction
    b_t: Fraction
    mu_t: Fraction
    l_t: Fraction
    x_new: Fraction
    mu_bar: Fraction
    l_bar: Fraction
    n: int
    side: str

    def next_params(self) -> Params:
        return Params(self.a_t, self.b_t)

    def next_mu(self) -> Fraction:
        """Offset parameter rescaled so the next level's l is -1 again."""
        return self.mu_bar / -self.l_bar


def induce(params: Params, mu, n: int) -> InducedMap:
    """Induced map on the side-L mixed band of order n (blocks L^n R, L^(n-1) R).

    The left branch of the induced map traverses the longer block L^n R, the
    right branch the shorter one. Raises NotMolecular unless mu lies in the
    band (half-open, top edge included).
    """
    mu = Fraction(mu)
    if classify_region(params, mu) != RegionTag("molecular", "L", n):
        raise NotMolecular(f"mu = {mu} is not in the order-{n} mixed band (side L)")
    a, b = params.a, params.b
    a_t = b * a**n
    b_t = b * a ** (n - 1)
    mu_t = mu * b * geom_sum(a, n - 1) + mu - 1
    l_t = -mu * b * a ** (n - 1)
    x_new = -mu * geom_sum(a, n - 2) / a ** (n - 1)
    mu_bar = mu_t - x_new * (1 - a_t)
    l_bar = l_t + x_new * (b_t - a_t)
    assert 0 < mu_bar <= -l_bar
    return InducedMap(a_t, b_t, mu_t, l_t, x_new, mu_bar, l_bar, n, "L")


def induce_r(params: Params, mu, m: int) -> InducedMap:
    """Induced map on the side-R mixed band of order m (blocks L R^(m-1), L R^m).

    Mirror of `induce`: here the left branch traverses the shorter block
    L R^(m-1) and the right branch the longer one, so the rescaled parameter
    still grows with mu across the band.
    """
    mu = Fraction(mu)
    if classify_region(params, mu) != RegionTag("molecular", "R", m):
        raise NotMolecular(f"mu = {mu} is not in the order-{m} mixed band (side R)")
    a, b = params.a, params.b
    a_t = a * b ** (m - 1)
    b_t = a * b**m
    mu_t = mu * b ** (m - 1) + (mu - 1) * geom_sum(b, m - 2)
    l_t = b ** (m - 1) * (mu * b - 1)
    x_new = ((1 - mu) * geom_sum(b, m - 2) - mu * b ** (m - 1)) / (a * b ** (m - 1))
    mu_bar = mu_t - x_new * (1 - a_t)
    l_bar = l_t + x_new * (b_t - a_t)
    assert 0 < mu_bar <= -l_bar
    return InducedMap(a_t, b_t, mu_t, l_t, x_new, mu_bar, l_bar, m, "R")


def expand_blocks(p: Pattern, n: int) -> Pattern:
    """Substitute L -> L^n R and R -> L^(n-1) R, one renormalization level down."""
    if n < 2:
        raise ValueError(f"block order must be >= 2, got {n}")
    big, small = "L" * n + "R", "L" * (n - 1) + "R"
    return Pattern("".join(big if c == "L" else small for c in p.word))


@dataclass(frozen=True)
class DescentLevel:
    params: Params
    mu: Fraction
    tag: RegionTag
    induced: InducedMap | None


@dataclass(frozen=True)
class Descent:
    """Full record of one pattern_at run: one level per classification."""

    levels: tuple[DescentLevel, ...]
    pattern: Pattern

    @property
    def inductions(self) -> int:
        return len(self.levels) - 1


def descend(params: Params, mu, max_depth: int = 32) -> Descent:
    """Resolve mu to its orbit pattern by repeated block substitution.

    Raises OutOfOrbitRange if mu (possibly after rescaling at some level)
    leaves the open unit range: no periodic orbit exists there. Raises
    DepthExceeded after max_depth levels; a mu trapped in the nested mixed
    bands has no periodic pattern at this resolution.
    """
    if params.l != -1:
        raise ValueError(f"descend requires l = -1, got {params.l}")
    mu = Fraction(mu)
    exp_l, exp_r = "L", "R"
    cur = params
    levels: list[DescentLevel] = []
    for _ in range(max_depth):
        tag = classify_region(cur, mu)
        if tag.kind == "out":
            raise OutOfOrbitRange(
                f"no periodic orbit: parameter {mu} outside (0, 1) at level {len(levels) + 1}"
            )
        if tag.kind == "atomic":
            word = exp_l * tag.n + exp_r if tag.side == "L" else exp_l + exp_r * tag.n
            levels.append(DescentLevel(cur, mu, tag, None))
            return Descent(tuple(levels), Pattern(word))
        if tag.side == "L":
            imap = induce(cur, mu, tag.n)
            exp_l, exp_r = exp_l * tag.n + exp_r, exp_l * (tag.n - 1) + exp_r
        else:
            imap = induce_r(cur, mu, tag.n)
            exp_l, exp_r = exp_l + exp_r * (tag.n - 1), exp_l + exp_r * tag.n
        levels.append(DescentLevel(cur, mu, tag, imap))
        cur, mu = imap.next_params(), imap.next_mu()
    raise DepthExceeded(f"no periodic pattern resolved within {max_depth} levels")


def pattern_at(params: Params, mu, max_depth: int = 32) -> Pattern:
    """The pattern whose existence interval contains mu."""
    return descend(params, mu, max_depth).pattern
