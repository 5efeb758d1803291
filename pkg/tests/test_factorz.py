import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois7.factorz import (
    factor_pattern,
    factor_z,
    is_irreducible_deg7,
    is_squarefree_z,
    modp_degree_pattern,
    squarefree_decomposition,
)
from galois7.intpoly import DomainError, IntPoly, content, poly_gcd

X = IntPoly([0, 1])


def rebuild(f, factors):
    out = IntPoly([content(f)])
    for g, m in factors:
        out = out * g ** m
    return out


class TestExamples:
    def test_difference_of_squares(self):
        assert factor_z(IntPoly([-1, 0, 1])) == [
            (IntPoly([-1, 1]), 1),
            (IntPoly([1, 1]), 1),
        ]

    def test_x_power(self):
        assert factor_z(IntPoly([0] * 35 + [1])) == [(X, 35)]
        assert factor_pattern(IntPoly([0] * 35 + [1])) == tuple([1] * 35)

    def test_pattern_examples(self):
        assert factor_pattern(IntPoly([-4, 0, 1])) == (1, 1)
        assert factor_pattern(IntPoly([-2, 0, 1])) == (2,)

    def test_x4_plus_1_irreducible_with_bruteforce_oracle(self):
        f = IntPoly([1, 0, 0, 0, 1])
        # no rational roots, and no factorization into two monic quadratics
        # x^2+ax+b with |a|,|b| bounded by the coefficient bound 2^2 * ||f||
        assert f(1) != 0 and f(-1) != 0
        found = False
        for a in range(-8, 9):
            for b in range(-8, 9):
                # (x^2+ax+b)(x^2-ax+c) matching x^4+1 forces b*c=1, c+b-a^2=0
                for c in range(-8, 9):
                    if b * c == 1 and b + c == a * a and a * (c - b) == 0:
                        found = True
        assert not found
        assert factor_pattern(f) == (4,)

    def test_multiplicity(self):
        f = IntPoly([-1, 1]) ** 3 * IntPoly([1, 1]) * 6
        facs = factor_z(f)
        assert facs == [(IntPoly([-1, 1]), 3), (IntPoly([1, 1]), 1)]
        assert rebuild(f, facs) == f

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor_z(IntPoly())


class TestRoundTrip:
    def test_random_products(self):
        rng = random.Random(271828)
        for _ in range(250):
            parts = []
            for _ in range(rng.randint(1, 4)):
                deg = rng.randint(1, 7)
                c = [rng.randint(-20, 20) for _ in range(deg)] + [rng.randint(1, 20)]
                parts.append(IntPoly(c))
            f = IntPoly([rng.choice([-5, -2, -1, 1, 2, 5])])
            for p in parts:
                f = f * p
            if rng.random() < 0.3:
                f = f * (parts[0] ** rng.randint(1, 2))
            facs = factor_z(f)
            assert rebuild(f, facs) == f
            for g, _ in facs:
                assert g.lc > 0 and content(g) == 1

    def test_random_dense(self):
        rng = random.Random(1618)
        for _ in range(250):
            deg = rng.randint(1, 40)
            coeffs = [rng.randint(-100, 100) for _ in range(deg)] + [
                rng.choice([x for x in range(-100, 101) if x])
            ]
            f = IntPoly(coeffs)
            facs = factor_z(f)
            assert rebuild(f, facs) == f


class TestModpConsistency:
    def test_reported_irreducibles_have_consistent_reductions(self):
        """For factors claimed irreducible, mod-p degree patterns over good
        primes must admit no proper sub-multiset summing to a proper divisor
        degree observed across all of them."""
        rng = random.Random(99)
        from galois7.factorz import _degree_mask

        for _ in range(40):
            deg = rng.randint(2, 12)
            f = IntPoly([rng.randint(-30, 30) for _ in range(deg)] + [rng.randint(1, 30)])
            for g, _ in factor_z(f):
                if g.degree < 2:
                    continue
                patterns = []
                from galois7.intpoly import small_primes

                for p in small_primes():
                    if p < 5 or g.lc % p == 0:
                        continue
                    pat = modp_degree_pattern(g.coeffs, p)
                    if pat is not None:
                        patterns.append(pat)
                    if len(patterns) >= 5:
                        break
                mask = _degree_mask(patterns, g.degree)
                # irreducibility never contradicted: full degree is realizable
                assert (mask >> g.degree) & 1


class TestSquarefreeMachinery:
    def test_yun(self):
        f = IntPoly([-1, 1]) ** 2 * IntPoly([1, 0, 1]) ** 3
        blocks = dict((m, g) for g, m in squarefree_decomposition(f))
        assert blocks[2] == IntPoly([-1, 1])
        assert blocks[3] == IntPoly([1, 0, 1])

    def test_is_squarefree(self):
        assert is_squarefree_z(IntPoly([-2, 0, 1]))
        assert not is_squarefree_z(IntPoly([-1, 1]) ** 2)

    @given(st.lists(st.integers(-15, 15), min_size=2, max_size=7))
    @settings(max_examples=100)
    def test_squarefree_agrees_with_gcd(self, coeffs):
        f = IntPoly(coeffs)
        if f.is_zero or f.degree < 1:
            return
        assert is_squarefree_z(f) == (poly_gcd(f, f.derivative()).degree == 0)


class TestIrreducibleDeg7:
    def test_examples(self):
        assert is_irreducible_deg7(IntPoly([-2, 0, 0, 0, 0, 0, 0, 1]))  # Eisenstein
        assert not is_irreducible_deg7(IntPoly([0, -1, 0, 0, 0, 0, 0, 1]))
        assert is_irreducible_deg7(
            IntPoly.from_descending([1, 1, -12, -7, 28, 14, -9, 1])
        )

    def test_wrong_degree(self):
        with pytest.raises(DomainError):
            is_irreducible_deg7(IntPoly([1, 1]))

    def test_agrees_with_factor_pattern(self):
        rng = random.Random(42)
        for _ in range(300):
            coeffs = [rng.randint(-3, 3) for _ in range(7)] + [rng.randint(1, 3)]
            f = IntPoly(coeffs)
            if f[0] == 0:
                continue
            assert is_irreducible_deg7(f) == (factor_pattern(f) == (7,))
