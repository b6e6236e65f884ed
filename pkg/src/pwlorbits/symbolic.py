"""Cyclic words over the two-letter alphabet {L, R}.

L codes an orbit point in the closed left half-line (x <= 0), R a point in
the open right half-line (x > 0). Two words related by rotation describe the
same periodic orbit, so every class-level query here works up to rotation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBlockDecomposable, UniformPattern

_ALPHABET = frozenset("LR")
_DUAL = str.maketrans("LR", "RL")

BinaryCode = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    """The symbol word of a periodic orbit; its length is the orbit period."""

    word: str

    def __post_init__(self) -> None:
        if not self.word or set(self.word) - _ALPHABET:
            raise ValueError(f"pattern must be a nonempty word over L/R: {self.word!r}")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        return cls(text.strip())

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i: int) -> str:
        return self.word[i]

    def count(self, symbol: str) -> int:
        return self.word.count(symbol)

    @property
    def uniform(self) -> bool:
        return len(set(self.word)) == 1

    def rotate(self, shift: int) -> "Pattern":
        s = shift % len(self.word)
        return Pattern(self.word[s:] + self.word[:s])

    def rotations(self) -> list["Pattern"]:
        return [self.rotate(s) for s in range(len(self.word))]

    def canonical(self) -> "Pattern":
        """Least rotation; the canonical representative of the cyclic class."""
        w = self.word
        return Pattern(min(w[s:] + w[:s] for s in range(len(w))))

    def cyclic_eq(self, other: "Pattern") -> bool:
        return len(self) == len(other) and self.canonical() == other.canonical()


def encode(p: Pattern) -> BinaryCode:
    """Bit-for-symbol substitution, L -> 0 and R -> 1, order preserved."""
    return tuple(0 if c == "L" else 1 for c in p.word)


def dual(p: Pattern) -> Pattern:
    """Swap every L with R and vice versa."""
    return Pattern(p.word.translate(_DUAL))


def _extreme_shift(p: Pattern, pick) -> int:
    w = p.word
    if p.uniform:
        raise UniformPattern(f"all rotations of {w!r} coincide")
    n = len(w)
    return pick(range(n), key=lambda s: (w[s:] + w[:s], s))


def r_way_shift(p: Pattern) -> int:
    """Smallest rotation offset whose word reads as the minimal binary number."""
    return _extreme_shift(p, min)


def l_way_shift(p: Pattern) -> int:
    """Smallest rotation offset whose word reads as the maximal binary number."""
    return _extreme_shift(p, max)


def r_way(p: Pattern) -> Pattern:
    """Rotation with minimal binary reading; starts with L and ends with R."""
    return p.rotate(r_way_shift(p))


def l_way(p: Pattern) -> Pattern:
    """Rotation with maximal binary reading; starts with R and ends with L."""
    return p.rotate(l_way_shift(p))


def is_primitive(p: Pattern) -> bool:
    """True unless the word is a whole number (>= 2) of copies of a shorter word."""
    w = p.word
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w == w[:d] * (n // d):
            return False
    return True


def _has_cyclic_pair(w: str, symbol: str) -> bool:
    n = len(w)
    return any(w[i] == symbol == w[(i + 1) % n] for i in range(n))


def has_LL_and_RR(p: Pattern) -> bool:
    """True iff some cyclic adjacency is LL and some other is RR."""
    return _has_cyclic_pair(p.word, "L") and _has_cyclic_pair(p.word, "R")


def max_run(p: Pattern, symbol: str) -> int:
    """Length of the longest cyclic run of `symbol` in the word."""
    w = p.word
    if set(w) == {symbol}:
        return len(w)
    if symbol not in w:
        return 0
    # breaking at the other symbol makes the runs plain substrings
    shift = w.index("R" if symbol == "L" else "L")
    lin = w[shift:] + w[:shift]
    return max(len(run) for run in lin.split("R" if symbol == "L" else "L"))


def block_decompose(p: Pattern) -> list[int]:
    """Run lengths of the single-R blocks covering the canonical rotation.

    Works on words without RR adjacency, whose minimal rotation reads
    L^k1 R L^k2 R ... L^km R; returns [k1, ..., km]. A word with RR but no LL
    is decomposed through its dual. Raises NotBlockDecomposable when both
    adjacencies occur, UniformPattern when only one symbol is present.
    """
    if p.uniform:
        raise UniformPattern(f"{p.word!r} has no blocks to split")
    ll, rr = _has_cyclic_pair(p.word, "L"), _has_cyclic_pair(p.word, "R")
    if ll and rr:
        raise NotBlockDecomposable(f"{p.word!r} mixes LL and RR adjacencies")
    if rr:
        p = dual(p)
    w = r_way(p).word
    return [len(chunk) for chunk in w.split("R")[:-1]]
