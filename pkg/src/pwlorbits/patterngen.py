"""Generation of all admissible patterns of a given period.

For period n there are exactly phi(n) admissible cyclic classes, one for each
R-count k coprime to n. The class for (n, k) is built by a Euclidean-style
recursion on block counts: divide the Ls among the Rs, leaving blocks of two
consecutive sizes, and arrange the blocks by solving the same problem one
level up. An exhaustive brute-force enumerator is kept alongside as the
independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import CeilingExceeded, NotCoprime
from .interval import Params, mu_interval
from .symbolic import Pattern, dual, is_primitive, r_way

DEFAULT_BRUTE_CEILING = 14


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _arrange(k: int, p: int) -> list[bool]:
    """Admissible cyclic arrangement of p "big" (True) and k-p "small" (False) blocks.

    Terminal layouts put the repeated block type first; otherwise the less
    frequent type is treated as the next level's R-symbol and the layout is
    pulled back through one more block substitution.
    """
    if p == k - 1:
        return [True] * (k - 1) + [False]
    if p == 1:
        return [False] * (k - 1) + [True]
    if p < k - p:
        # big blocks are rarer: runs of smalls closed by one big
        q, p2 = divmod(k - p, p)
        big2 = [False] * (q + 1) + [True]
        small2 = [False] * q + [True]
        inner = _arrange(p, p2)
    else:
        q, p2 = divmod(p, k - p)
        big2 = [True] * (q + 1) + [False]
        small2 = [True] * q + [False]
        inner = _arrange(k - p, p2)
    return [s for c in inner for s in (big2 if c else small2)]


def _build(n: int, k: int) -> Pattern:
    # 1 <= k <= n/2 and gcd(n, k) = 1
    if k == 1:
        return Pattern("L" * (n - 1) + "R")
    q, p = divmod(n - k, k)
    big, small = "L" * (q + 1) + "R", "L" * q + "R"
    return Pattern("".join(big if c else small for c in _arrange(k, p)))


def pattern_for(n: int, k: int) -> Pattern:
    """The unique admissible cyclic class of period n with k Rs and n-k Ls.

    Requires gcd(n, k) = 1; raises NotCoprime otherwise. R-heavy classes
    (k > n-k) are the duals of their L-heavy mirrors.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) = {gcd(n, k)} != 1: no admissible class")
    if 2 * k > n:
        return r_way(dual(_build(n, n - k)))
    return _build(n, k)


@dataclass(frozen=True)
class PatternFamily:
    """All phi(period) admissible classes of one period, keyed by R-count."""

    period: int
    members: dict[int, Pattern]

    def __len__(self) -> int:
        return len(self.members)

    def classes(self) -> set[Pattern]:
        return {p.canonical() for p in self.members.values()}


def generate_period(n: int) -> PatternFamily:
    """pattern_for(n, k) for every k coprime to n, in canonical rotation."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    members = {k: r_way(pattern_for(n, k)) for k in range(1, n) if gcd(n, k) == 1}
    return PatternFamily(n, members)


def exhaustive_admissible(
    n: int, params: Params, ceiling: int = DEFAULT_BRUTE_CEILING
) -> set[Pattern]:
    """Brute-force the admissible classes of period n under the given params.

    Enumerates all 2^n words, keeps one canonical representative per cyclic
    class, drops non-primitive words, and keeps those whose interval is
    non-empty. Independent of the block recursion above.
    """
    if n > ceiling:
        raise CeilingExceeded(f"period {n} above brute-force ceiling {ceiling}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    found = set()
    for letters in product("LR", repeat=n):
        word = "".join(letters)
        if "L" not in word or "R" not in word:
            continue
        p = Pattern(word)
        canon = p.canonical()
        if canon != p:
            continue
        if not is_primitive(p):
            continue
        if not mu_interval(p, params).empty:
            found.add(canon)
    return found
