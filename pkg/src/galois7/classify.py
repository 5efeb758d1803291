"""Galois-group classification of irreducible septics.

Three routes: the 3-set 35-ic resolvent (exact, symbolic), the triple-
resolvent procedure (quadratic / 30-ic / 120-ic, lazily evaluated), and a
mod-p Frobenius cycle-type census used as a cross-check and as a fast exact
S7 proof. Expected factor patterns come from the permutation module's orbit
computations, never from hard-coded tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache

from .factorz import factor_pattern, factor_z, modp_degree_pattern
from .intpoly import (
    DomainError,
    IntPoly,
    discriminant7,
    is_perfect_square,
    small_primes,
    squarefree_part,
)
from .perm import GaloisLabel, catalog, orbit_lengths_on_cosets, orbit_partition_on_3sets
from .resolvent import (
    DuplicateThetaError,
    ResolventKind,
    resolvent35_symbolic,
    resolvent_numeric,
    tschirnhausen,
)
from .factorz import is_squarefree_z


class InconsistentClassificationError(RuntimeError):
    """Observed patterns match no transitive subgroup of S7."""

    def __init__(self, message, evidence):
        super().__init__(message)
        self.evidence = evidence


@dataclass(frozen=True)
class Classification:
    label: GaloisLabel
    method: str
    evidence: tuple = ()
    confidence: str = "exact"
    candidates: tuple = ()
    census: tuple = ()

    def to_json(self):
        payload = {
            "label": self.label.value,
            "method": self.method,
            "evidence": [
                {"kind": kind, "pattern": list(pattern)} for kind, pattern in self.evidence
            ],
            "confidence": self.confidence,
        }
        if self.candidates:
            payload["candidates"] = [c.value for c in self.candidates]
        if self.census:
            payload["census"] = [
                {"cycle_type": list(t), "count": n} for t, n in self.census
            ]
        return json.dumps(payload, sort_keys=True)


@cache
def expected_tables():
    """Expected factor patterns per group for each resolvent, computed from
    the materialized subgroups (orbit lengths on cosets / on 3-sets)."""
    cat = catalog()
    t = {}
    for label, group in cat.items():
        t[label] = {
            ResolventKind.QUADRATIC: orbit_lengths_on_cosets(group, cat[GaloisLabel.A7]),
            ResolventKind.THIRTY: orbit_lengths_on_cosets(group, cat[GaloisLabel.PSL32]),
            ResolventKind.HUNDRED_TWENTY: orbit_lengths_on_cosets(group, cat[GaloisLabel.F42]),
            ResolventKind.THREE_SET_35: orbit_partition_on_3sets(group),
        }
    return t


@cache
def cycle_type_support(label):
    return catalog()[label].cycle_types()


def _monicize(f):
    """Monic integer model with the same splitting field: y = lc * x."""
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    if f.is_monic():
        return f
    a = f.lc
    return IntPoly([f[i] * a ** (6 - i) for i in range(7)] + [1])


def _squarefree_resolvent35(f):
    """The 35-ic of f, after Tschirnhausen if orbit sums collide."""
    base = f
    for seed in range(1, 25):
        r = resolvent35_symbolic(base)
        if is_squarefree_z(r):
            return r, base
        base = tschirnhausen(f, seed)
    raise InconsistentClassificationError("no squarefree 35-ic resolvent found", ())


def classify_35(f):
    """Classification from the factor degrees of the 3-set 35-ic resolvent."""
    f = _monicize(f)
    resolvent, used = _squarefree_resolvent35(f)
    factors = factor_z(resolvent)
    pattern = tuple(sorted(g.degree for g, _ in factors))
    evidence = [("35ic", pattern)]
    tables = expected_tables()

    if pattern == (7, 7, 7, 7, 7):
        label = GaloisLabel.C7
    elif pattern == (7, 7, 7, 14):
        label = GaloisLabel.D7
    elif pattern == (7, 7, 21):
        label = GaloisLabel.F21
    elif pattern == (7, 28):
        label = GaloisLabel.PSL32
    elif pattern == (14, 21):
        # the F42 / PSL(3,2) split via the degree-42 auxiliary polynomial
        disc = discriminant7(used)
        split = squarefree_part(disc)
        if not split.certain:
            raise InconsistentClassificationError(
                "squarefree part of the discriminant is ambiguous", tuple(evidence)
            )
        h21 = next(g for g, _ in factors if g.degree == 21)
        from .resolvent import auxiliary_gd

        gd = auxiliary_gd(h21, split.d)
        gd_pattern = factor_pattern(gd)
        evidence.append(("gd42", gd_pattern))
        label = GaloisLabel.PSL32 if len(gd_pattern) > 1 else GaloisLabel.F42
    elif pattern == (35,):
        disc = discriminant7(f)
        evidence.append(("quadratic", (1, 1) if is_perfect_square(disc) else (2,)))
        label = GaloisLabel.A7 if is_perfect_square(disc) else GaloisLabel.S7
    else:
        raise InconsistentClassificationError(
            f"35-ic pattern {pattern} matches no transitive subgroup",
            tuple(evidence),
        )
    if label is not GaloisLabel.PSL32:
        assert pattern == tables[label][ResolventKind.THREE_SET_35]
    return Classification(label, "resolvent35", tuple(evidence))


def _pattern_of_numeric_resolvent(f, kind):
    """Factor pattern of a numeric resolvent, transforming on collisions."""
    base = f
    for seed in range(1, 25):
        try:
            r = resolvent_numeric(base, kind)
        except DuplicateThetaError:
            base = tschirnhausen(f, seed)
            continue
        return factor_pattern(r)
    raise InconsistentClassificationError(
        f"could not build a squarefree {kind.value} resolvent", ()
    )


def classify_foulkes(f):
    """Classification by the quadratic / 30-ic / 120-ic factor patterns.

    The quadratic is the discriminant-square test; the 30-ic is computed only
    when needed and the 120-ic only when the 30-ic still leaves a tie."""
    f = _monicize(f)
    tables = expected_tables()
    disc = discriminant7(f)
    t_pattern = (1, 1) if is_perfect_square(disc) else (2,)
    evidence = [("quadratic", t_pattern)]
    candidates = [
        lab for lab in GaloisLabel if tables[lab][ResolventKind.QUADRATIC] == t_pattern
    ]
    for kind, name in ((ResolventKind.THIRTY, "30ic"), (ResolventKind.HUNDRED_TWENTY, "120ic")):
        if len(candidates) <= 1:
            break
        pattern = _pattern_of_numeric_resolvent(f, kind)
        evidence.append((name, pattern))
        candidates = [lab for lab in candidates if tables[lab][kind] == pattern]
    if len(candidates) != 1:
        raise InconsistentClassificationError(
            f"resolvent patterns fit {len(candidates)} groups", tuple(evidence)
        )
    return Classification(candidates[0], "foulkes3", tuple(evidence))


def good_primes(f, count, start_after=1):
    """The first `count` primes dividing neither lc(f) nor disc(f)."""
    disc = discriminant7(f) if f.degree == 7 else None
    if disc == 0:
        raise DomainError("polynomial has repeated roots")
    out = []
    for p in small_primes():
        if p <= start_after:
            continue
        if f.lc % p == 0 or (disc is not None and disc % p == 0):
            continue
        out.append(p)
        if len(out) >= count:
            break
    return out


def modp_census(f, prime_count=100):
    """Frobenius cycle-type census over good primes.

    The degree pattern of f mod p equals the cycle type of a Frobenius
    element, so every observed type must lie in the group's support. The only
    group provable this way is S7 (every census is consistent with S7);
    anything else comes back flagged as ambiguous with the full candidate
    set, minimal-order member first.
    """
    if prime_count < 30:
        raise DomainError("census needs at least 30 primes")
    counts = {}
    for p in good_primes(f, prime_count):
        pat = modp_degree_pattern(f.coeffs, p)
        if pat is None:
            continue
        ctype = tuple(sorted(pat, reverse=True))
        counts[ctype] = counts.get(ctype, 0) + 1
    observed = frozenset(counts)
    consistent = [
        lab for lab in GaloisLabel if observed <= cycle_type_support(lab)
    ]
    census = tuple(sorted(counts.items()))
    if not consistent:
        raise InconsistentClassificationError(
            "census types fit no transitive subgroup", (("census", tuple(observed)),)
        )
    consistent.sort(key=lambda lab: lab.order)
    if len(consistent) == 1:
        return Classification(
            consistent[0], "modp-census", (), "exact", tuple(consistent), census
        )
    return Classification(
        consistent[0],
        "modp-census",
        (),
        f"probabilistic({prime_count} primes, ambiguous)",
        tuple(consistent),
        census,
    )


def classify_staged(f, census_primes=30):
    """Census first (fast exact S7), then the 35-ic, then the triple route."""
    f = _monicize(f)
    stage1 = modp_census(f, max(30, census_primes))
    if stage1.confidence == "exact":
        return Classification(
            stage1.label, "staged:modp-census", stage1.evidence, "exact",
            stage1.candidates, stage1.census,
        )
    try:
        result = classify_35(f)
        return Classification(
            result.label, "staged:resolvent35", result.evidence, result.confidence,
            (), stage1.census,
        )
    except InconsistentClassificationError:
        result = classify_foulkes(f)
        return Classification(
            result.label, "staged:foulkes3", result.evidence, result.confidence,
            (), stage1.census,
        )
