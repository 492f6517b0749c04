"""Signed permutations and containment of 2-letter signed patterns.

A signed permutation of order n arranges the symbols 1..n in a row, each
symbol optionally barred.  Letters are encoded as nonzero integers whose
magnitude is the symbol and whose sign records the bar (negative = barred).
The group of all such arrangements has 2^n * n! elements.

A pattern is a signed permutation of length 2.  A permutation contains a
pattern when some pair of positions i < j matches it: the magnitudes of the
two letters compare the same way as the pattern's magnitudes, and each
letter is barred exactly when the corresponding pattern letter is barred.
Exactly eight patterns exist, and every ordered pair of letters with
distinct magnitudes realizes exactly one of them.

The eight patterns carry a fixed index 0..7 used everywhere downstream
(bitmask encodings, histogram buckets, table lookups):

    0: 1 2      1: 2 1      2: -1 2     3: 1 -2
    4: -1 -2    5: 2 -1     6: -2 1     7: -2 -1
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 9


class ZeroLetterError(ValueError):
    """A letter was encoded as 0, which names no symbol."""


class DuplicateMagnitudeError(ValueError):
    """The same symbol appears more than once, bars notwithstanding."""


class MagnitudeOutOfRangeError(ValueError):
    """The magnitudes do not form exactly {1..n}."""


class EqualMagnitudesError(ValueError):
    """A letter pair with equal magnitudes realizes no pattern."""


class CapExceededError(ValueError):
    """The requested order exceeds the configured safety cap."""


def check_cap(n: int, cap: int = DEFAULT_CAP) -> None:
    """Reject negative orders and orders beyond the cap.

    Full enumeration grows as 2^n * n!, so anything past the cap is almost
    certainly a mistake; callers opt in to more by passing a larger cap.
    """
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    if n > cap:
        raise CapExceededError(f"order {n} exceeds cap {cap}")


class SignedPermutation(tuple):
    """An immutable word of signed letters.

    Construction does not validate; use validate_permutation() to build one
    from untrusted input.
    """

    __slots__ = ()

    @property
    def order(self) -> int:
        return len(self)

    def oneline(self) -> str:
        return " ".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self)!r})"


def validate_permutation(raw: Sequence[int]) -> SignedPermutation:
    """Check that raw encodes a signed permutation and wrap it.

    Raises ZeroLetterError, DuplicateMagnitudeError, or
    MagnitudeOutOfRangeError as appropriate.
    """
    letters = tuple(raw)
    n = len(letters)
    seen = 0
    for x in letters:
        if x == 0:
            raise ZeroLetterError("letter 0 names no symbol")
        m = abs(x)
        if m > n:
            raise MagnitudeOutOfRangeError(
                f"magnitude {m} out of range for order {n}"
            )
        bit = 1 << m
        if seen & bit:
            raise DuplicateMagnitudeError(f"magnitude {m} appears twice")
        seen |= bit
    return SignedPermutation(letters)


_PATTERN_LETTERS = (
    (1, 2),
    (2, 1),
    (-1, 2),
    (1, -2),
    (-1, -2),
    (2, -1),
    (-2, 1),
    (-2, -1),
)


@dataclass(frozen=True)
class Pattern:
    """One of the eight length-2 signed patterns, with its fixed index."""

    index: int
    letters: SignedPermutation

    def __str__(self) -> str:
        return self.letters.oneline()


PATTERNS: tuple[Pattern, ...] = tuple(
    Pattern(i, SignedPermutation(p)) for i, p in enumerate(_PATTERN_LETTERS)
)

_PATTERN_BY_LETTERS = {tuple(p.letters): p for p in PATTERNS}

# pair type -> pattern index, keyed by (first barred)<<2 | (second barred)<<1
# | (magnitudes ascending)
_PAIR_INDEX = (1, 0, 5, 3, 6, 2, 7, 4)


def pair_index(x: int, y: int) -> int:
    """Index of the pattern realized by the letter pair (x, y), in order."""
    mx, my = abs(x), abs(y)
    if mx == my:
        raise EqualMagnitudesError(f"letters {x} and {y} share a magnitude")
    return _PAIR_INDEX[((x < 0) << 2) | ((y < 0) << 1) | (mx < my)]


def pair_pattern(x: int, y: int) -> Pattern:
    """The pattern realized by the letter pair (x, y), in this order."""
    return PATTERNS[pair_index(x, y)]


def pattern_of(letters: Sequence[int]) -> Pattern:
    """Look up the pattern with exactly these letters (magnitudes {1, 2})."""
    p = _PATTERN_BY_LETTERS.get(tuple(letters))
    if p is None:
        raise ValueError(
            f"{tuple(letters)} is not a pattern; magnitudes must be exactly 1 and 2"
        )
    return p


@dataclass(frozen=True, order=True)
class PatternSet:
    """A subset of the eight patterns, stored as an 8-bit mask.

    Bit i is set when the pattern with index i belongs to the set.  The
    integer mask doubles as a canonical encoding: histogram buckets and
    subset-lattice transforms index arrays by it directly.
    """

    mask: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= 0xFF:
            raise ValueError(f"mask out of range: {self.mask}")

    @classmethod
    def from_patterns(
        cls, patterns: Iterable[Pattern | Sequence[int]]
    ) -> "PatternSet":
        mask = 0
        for p in patterns:
            if not isinstance(p, Pattern):
                p = pattern_of(p)
            mask |= 1 << p.index
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> "PatternSet":
        """Parse a comma-separated list of patterns, e.g. "1 2, -2 1".

        Each pattern is two signed integers with magnitudes exactly {1, 2}.
        Duplicates are tolerated, deduplicated, and warned about.  Empty or
        blank text parses as the empty set.
        """
        mask = 0
        if text.strip() == "":
            return cls(0)
        for token in text.split(","):
            parts = token.split()
            if len(parts) != 2:
                raise ValueError(f"pattern needs exactly two letters: {token!r}")
            try:
                letters = tuple(int(s) for s in parts)
            except ValueError:
                raise ValueError(f"pattern letters must be integers: {token!r}")
            p = pattern_of(letters)
            bit = 1 << p.index
            if mask & bit:
                warnings.warn(f"duplicate pattern ignored: {p}", stacklevel=2)
            mask |= bit
        return cls(mask)

    def patterns(self) -> tuple[Pattern, ...]:
        return tuple(self)

    def text(self) -> str:
        """Inverse of parse (up to whitespace): "1 2, -1 2"."""
        return ", ".join(str(p) for p in self)

    def with_pattern(self, p: Pattern) -> "PatternSet":
        return PatternSet(self.mask | (1 << p.index))

    def __or__(self, other: "PatternSet") -> "PatternSet":
        return PatternSet(self.mask | other.mask)

    def __and__(self, other: "PatternSet") -> "PatternSet":
        return PatternSet(self.mask & other.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Pattern]:
        return (PATTERNS[i] for i in range(8) if self.mask >> i & 1)

    def __contains__(self, p: Pattern) -> bool:
        return bool(self.mask >> p.index & 1)

    def __str__(self) -> str:
        return "{" + self.text() + "}"


EMPTY_SET = PatternSet(0)
FULL_SET = PatternSet(0xFF)


def contains(alpha: Sequence[int], tau: Pattern) -> bool:
    """Does alpha contain the pattern tau?"""
    target = tau.index
    letters = tuple(alpha)
    table = _PAIR_INDEX
    for i in range(len(letters) - 1):
        x = letters[i]
        xs = (x < 0) << 2
        mx = abs(x)
        for y in letters[i + 1 :]:
            if table[xs | ((y < 0) << 1) | (mx < abs(y))] == target:
                return True
    return False


def containment_mask(alpha: Sequence[int]) -> PatternSet:
    """The set of all patterns realized by some position pair of alpha."""
    letters = tuple(alpha)
    table = _PAIR_INDEX
    mask = 0
    for i in range(len(letters) - 1):
        x = letters[i]
        xs = (x < 0) << 2
        mx = abs(x)
        for y in letters[i + 1 :]:
            mask |= 1 << table[xs | ((y < 0) << 1) | (mx < abs(y))]
        if mask == 0xFF:
            break
    return PatternSet(mask)


def avoids(alpha: Sequence[int], tset: PatternSet) -> bool:
    """Does alpha realize no pattern from tset?  Exits on first witness."""
    t = tset.mask
    if t == 0:
        return True
    letters = tuple(alpha)
    table = _PAIR_INDEX
    for i in range(len(letters) - 1):
        x = letters[i]
        xs = (x < 0) << 2
        mx = abs(x)
        for y in letters[i + 1 :]:
            if t >> table[xs | ((y < 0) << 1) | (mx < abs(y))] & 1:
                return False
    return True


def _iter_bn(n: int) -> Iterator[SignedPermutation]:
    if n == 0:
        yield SignedPermutation(())
        return
    for base in itertools.permutations(range(1, n + 1)):
        for signs in range(1 << n):
            yield SignedPermutation(
                -base[i] if signs >> i & 1 else base[i] for i in range(n)
            )


def iterate_Bn(n: int, cap: int = DEFAULT_CAP) -> Iterator[SignedPermutation]:
    """All 2^n * n! signed permutations of order n.

    Order: magnitude words lexicographically, and for each word all 2^n
    sign choices with position 0 flipping fastest.  The cap is checked
    before the iterator is returned.
    """
    check_cap(n, cap)
    return _iter_bn(n)
