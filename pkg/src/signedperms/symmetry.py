"""Symmetries that preserve pattern-avoidance counts.

Three involutions act on signed permutations:

    reversal    read the word right to left
    barring     flip the bar on every letter
    complement  replace each magnitude m by n + 1 - m, keeping bars

Each commutes with the others, so they generate a group of order 8.  The
same operations act on patterns (length-2 words) and hence on pattern sets,
and the count of permutations avoiding a set T is constant on the orbit of
T under this action.  Orbits of the 256 pattern sets are the natural unit
of study: one representative per orbit suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Sequence

from .core import PATTERNS, Pattern, PatternSet, SignedPermutation


def reversal(alpha: Sequence[int]) -> SignedPermutation:
    return SignedPermutation(reversed(tuple(alpha)))


def barring(alpha: Sequence[int]) -> SignedPermutation:
    return SignedPermutation(-x for x in alpha)


def complement(alpha: Sequence[int]) -> SignedPermutation:
    """Send each magnitude m to n + 1 - m; bars stay where they are."""
    letters = tuple(alpha)
    n = len(letters)
    return SignedPermutation(
        (n + 1 - x) if x > 0 else -(n + 1 + x) for x in letters
    )


@dataclass(frozen=True)
class SymmetryElement:
    """A group element, recorded by which generators it applies."""

    use_reversal: bool = False
    use_barring: bool = False
    use_complement: bool = False


IDENTITY = SymmetryElement()


def apply(g: SymmetryElement, alpha: Sequence[int]) -> SignedPermutation:
    """Act on a signed permutation: complement, then barring, then reversal.

    The three generators commute, so the application order is immaterial.
    """
    beta = SignedPermutation(tuple(alpha))
    if g.use_complement:
        beta = complement(beta)
    if g.use_barring:
        beta = barring(beta)
    if g.use_reversal:
        beta = reversal(beta)
    return beta


@cache
def _action_table(g: SymmetryElement) -> tuple[int, ...]:
    # how g permutes the eight pattern indices
    table = []
    for p in PATTERNS:
        image = apply(g, p.letters)
        table.append(next(q.index for q in PATTERNS if tuple(q.letters) == tuple(image)))
    return tuple(table)


def apply_to_pattern(g: SymmetryElement, p: Pattern) -> Pattern:
    return PATTERNS[_action_table(g)[p.index]]


def apply_to_set(g: SymmetryElement, tset: PatternSet) -> PatternSet:
    table = _action_table(g)
    out = 0
    m = tset.mask
    for i in range(8):
        if m >> i & 1:
            out |= 1 << table[i]
    return PatternSet(out)


@cache
def group_elements() -> frozenset[SymmetryElement]:
    """Close the three generators into a group under composition.

    Elements are distinguished by how they act on the eight patterns, and
    labeled by which generators produced them.  The closure is computed,
    not assumed: starting from the identity, compose with each generator
    until nothing new appears.  A relabeling clash along the way would mean
    the flag triple is not a faithful name for the action and raises.
    """
    generators = (
        SymmetryElement(use_reversal=True),
        SymmetryElement(use_barring=True),
        SymmetryElement(use_complement=True),
    )
    gen_tables = [_action_table(g) for g in generators]
    identity = tuple(range(8))
    seen: dict[tuple[int, ...], SymmetryElement] = {identity: IDENTITY}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for t in frontier:
            elem = seen[t]
            for g, gt in zip(generators, gen_tables):
                composed = tuple(gt[t[i]] for i in range(8))
                flags = SymmetryElement(
                    elem.use_reversal ^ g.use_reversal,
                    elem.use_barring ^ g.use_barring,
                    elem.use_complement ^ g.use_complement,
                )
                known = seen.get(composed)
                if known is None:
                    seen[composed] = flags
                    next_frontier.append(composed)
                elif known != flags:
                    raise RuntimeError(
                        "generator flags do not label pattern actions faithfully"
                    )
        frontier = next_frontier
    return frozenset(seen.values())


@dataclass(frozen=True)
class Orbit:
    """An orbit of pattern sets under the symmetry group."""

    representative: PatternSet
    members: frozenset[PatternSet]

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_of_set(tset: PatternSet) -> Orbit:
    members = frozenset(apply_to_set(g, tset) for g in group_elements())
    rep = min(members, key=lambda s: s.mask)
    return Orbit(rep, members)


def canonical_representative(tset: PatternSet) -> PatternSet:
    """The orbit member with the smallest mask."""
    return orbit_of_set(tset).representative


@cache
def all_orbits() -> tuple[Orbit, ...]:
    """All orbits of the 256 pattern sets, sorted by (set size, rep mask).

    The position of an orbit in this tuple is its orbit id.
    """
    seen: set[int] = set()
    orbits = []
    for mask in range(256):
        if mask in seen:
            continue
        orb = orbit_of_set(PatternSet(mask))
        seen.update(s.mask for s in orb.members)
        orbits.append(orb)
    orbits.sort(key=lambda o: (len(o.representative), o.representative.mask))
    return tuple(orbits)


def orbit_census_by_size() -> dict[int, int]:
    """How many orbits have representatives of each set size 0..8."""
    counts = {k: 0 for k in range(9)}
    for orb in all_orbits():
        counts[len(orb.representative)] += 1
    return counts
