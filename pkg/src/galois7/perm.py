"""Permutations of 7 points, the transitive subgroups of S7, cosets and orbits.

Permutations are tuples of images of 0..6 (the paper-facing points 1..7 are
these plus one). Groups are materialized as full element sets; nothing here
exceeds |S7| = 5040.
"""

from __future__ import annotations

import enum
from functools import cache
from itertools import combinations, permutations

from .intpoly import DomainError

IDENTITY = tuple(range(7))


def compose(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(7))


def inverse(p):
    out = [0] * 7
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def cycle_type(p):
    """Cycle lengths, sorted descending (a partition of 7)."""
    seen = [False] * 7
    lens = []
    for i in range(7):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lens.append(n)
    return tuple(sorted(lens, reverse=True))


def parity(p):
    """0 for even, 1 for odd."""
    return sum(n - 1 for n in cycle_type(p)) & 1


class PermGroup:
    """A subgroup of S7 as an explicit element set."""

    __slots__ = ("generators", "elements")

    def __init__(self, generators):
        self.generators = tuple(generators)
        elems = {IDENTITY}
        frontier = [IDENTITY]
        while frontier:
            nxt = []
            for e in frontier:
                for g in self.generators:
                    h = compose(g, e)
                    if h not in elems:
                        elems.add(h)
                        nxt.append(h)
            frontier = nxt
        self.elements = frozenset(elems)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def is_transitive(self):
        reached = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                if g[x] not in reached:
                    reached.add(g[x])
                    frontier.append(g[x])
        return len(reached) == 7

    def cycle_types(self):
        return frozenset(cycle_type(p) for p in self.elements)

    def __repr__(self):
        return f"PermGroup(order={self.order})"


class GaloisLabel(enum.Enum):
    """The seven transitive subgroups of S7, with their stable wire names."""

    C7 = "C7"
    D7 = "D7"
    F21 = "C7:C3"
    F42 = "C7:C6"
    PSL32 = "PSL(3,2)"
    A7 = "A7"
    S7 = "S7"

    @property
    def order(self):
        return _LABEL_ORDERS[self]

    @classmethod
    def from_string(cls, s):
        for lab in cls:
            if lab.value == s:
                return lab
        raise DomainError(f"unknown group label {s!r}")


_LABEL_ORDERS = {
    GaloisLabel.C7: 7,
    GaloisLabel.D7: 14,
    GaloisLabel.F21: 21,
    GaloisLabel.F42: 42,
    GaloisLabel.PSL32: 168,
    GaloisLabel.A7: 2520,
    GaloisLabel.S7: 5040,
}

# x -> x+1 and multiplications by units, on points 0..6 read as Z/7
SHIFT = tuple((i + 1) % 7 for i in range(7))
NEGATE = tuple((-i) % 7 for i in range(7))
MUL2 = tuple((2 * i) % 7 for i in range(7))
MUL3 = tuple((3 * i) % 7 for i in range(7))

# Fano plane with line set {i, i+2, i+3}; this is the plane whose lines are
# exactly the monomial index triples of the 30-ic resolvent invariant
FANO_LINES = tuple(
    frozenset(((i) % 7, (i + 2) % 7, (i + 3) % 7)) for i in range(7)
)

# an involution preserving FANO_LINES but outside <SHIFT, MUL2>
_PSL_EXTRA = (0, 1, 3, 2, 6, 5, 4)


def _preserves_lines(p, lines):
    lineset = set(lines)
    return all(frozenset(p[i] for i in line) in lineset for line in lines)


@cache
def catalog():
    """The seven transitive subgroups, keyed by label.

    C7 is the 7-cycle; D7 adds negation; F21/F42 add multiplications of order
    3/6; PSL(3,2) is the automorphism group of FANO_LINES; A7/S7 as usual.
    """
    groups = {
        GaloisLabel.C7: PermGroup([SHIFT]),
        GaloisLabel.D7: PermGroup([SHIFT, NEGATE]),
        GaloisLabel.F21: PermGroup([SHIFT, MUL2]),
        GaloisLabel.F42: PermGroup([SHIFT, MUL3]),
        GaloisLabel.PSL32: PermGroup([SHIFT, MUL2, _PSL_EXTRA]),
        GaloisLabel.A7: PermGroup([(1, 2, 0, 3, 4, 5, 6), SHIFT]),
        GaloisLabel.S7: PermGroup([(1, 0, 2, 3, 4, 5, 6), SHIFT]),
    }
    for label, group in groups.items():
        if group.order != label.order:
            raise AssertionError(f"{label}: order {group.order} != {label.order}")
        if not group.is_transitive():
            raise AssertionError(f"{label}: not transitive")
    if not _preserves_lines(_PSL_EXTRA, FANO_LINES):
        raise AssertionError("PSL generator does not preserve the Fano plane")
    return groups


def cosets(H, G):
    """Lexicographically minimal representatives of the cosets sigma*H in G."""
    if not H <= G:
        raise DomainError("H is not a subgroup of G")
    helems = H.elements
    seen = set()
    reps = []
    for sigma in sorted(G.elements):
        if sigma in seen:
            continue
        reps.append(sigma)
        for h in helems:
            seen.add(compose(sigma, h))
    return reps


def _orbit_sizes(points, group_elements, act):
    left = set(points)
    sizes = []
    while left:
        start = next(iter(left))
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in group_elements:
                y = act(g, x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        sizes.append(len(orbit))
        left -= orbit
    return tuple(sorted(sizes))


def orbit_partition_on_3sets(G):
    """Orbit sizes of G on the 35 three-element subsets of the points."""
    pts = [frozenset(c) for c in combinations(range(7), 3)]
    return _orbit_sizes(pts, G.generators or (IDENTITY,), lambda g, s: frozenset(g[i] for i in s))


@cache
def _s7_coset_table(H):
    """Coset index lookup and generator action table for S7 / H."""
    s7 = catalog()[GaloisLabel.S7]
    helems = H.elements
    index = {}
    reps = []
    for sigma in sorted(s7.elements):
        if sigma in index:
            continue
        k = len(reps)
        reps.append(sigma)
        for h in helems:
            index[compose(sigma, h)] = k
    return reps, index


def orbit_lengths_on_cosets(G, H):
    """Orbit lengths of G acting by left multiplication on the cosets S7/H."""
    reps, index = _s7_coset_table(H)
    gens = G.generators or (IDENTITY,)

    def act(g, k):
        return index[compose(g, reps[k])]

    return _orbit_sizes(range(len(reps)), gens, act)


