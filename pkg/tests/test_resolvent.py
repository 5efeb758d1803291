import random

import pytest

from galois7.factorz import factor_pattern, is_irreducible_deg7, is_squarefree_z
from galois7.intpoly import DomainError, IntPoly, discriminant7
from galois7.resolvent import (
    INVARIANT_30,
    INVARIANT_120,
    DegenerateTransformError,
    DuplicateThetaError,
    ResolventKind,
    auxiliary_gd,
    dump_line,
    minimal_polynomial_of,
    resolvent35_symbolic,
    resolvent_numeric,
    root_power_sums,
    symbolic_e1_e2,
    transform_for_seed,
    triple_sum_power_sums,
    tschirnhausen,
    tschirnhausen_auto,
)

X72 = IntPoly([-2, 0, 0, 0, 0, 0, 0, 1])


def random_monic(rng, bound=3):
    while True:
        c = [rng.randint(-bound, bound) for _ in range(7)] + [1]
        if c[0] != 0:
            return IntPoly(c)


class TestPowerSums:
    def test_newton_small(self):
        f = IntPoly([-6, 11, -6, 1])  # (x-1)(x-2)(x-3)
        ps = root_power_sums(f, 4)
        assert ps[1] == 6 and ps[2] == 14 and ps[3] == 36 and ps[4] == 98

    def test_triple_sum_p1_p2(self):
        rng = random.Random(17)
        for _ in range(50):
            f = random_monic(rng, 9)
            p = triple_sum_power_sums(f, 2)
            assert p[0] == -15 * f[6]
            assert p[1] == 15 * f[6] ** 2 - 20 * f[5]


class TestResolvent35:
    def test_e1_e2_identities(self):
        rng = random.Random(20240401)
        for _ in range(50):
            f = random_monic(rng, 9)
            e1, e2 = symbolic_e1_e2(f)
            assert e1 == -15 * f[6]
            assert e2 == 105 * f[6] ** 2 + 10 * f[5]

    def test_x7(self):
        assert resolvent35_symbolic(IntPoly([0] * 7 + [1])) == IntPoly([0] * 35 + [1])

    def test_monic_required(self):
        with pytest.raises(DomainError):
            resolvent35_symbolic(IntPoly([1] + [0] * 6 + [2]))

    def test_symbolic_equals_numeric(self):
        rng = random.Random(31337)
        done = 0
        while done < 12:
            f = random_monic(rng)
            if not is_squarefree_z(f):
                continue
            sym = resolvent35_symbolic(f)
            try:
                num = resolvent_numeric(f, ResolventKind.THREE_SET_35)
            except DuplicateThetaError:
                continue
            assert sym == num
            done += 1

    def test_table14_pattern(self):
        f = IntPoly.from_descending([1, 1, -12, -7, 28, 14, -9, 1])
        assert factor_pattern(resolvent35_symbolic(f)) == (7, 7, 7, 7, 7)


class TestTschirnhausen:
    def test_seed_zero_is_identity(self):
        assert transform_for_seed(0) == IntPoly([0, 1])
        assert tschirnhausen(X72, 0) == X72

    def test_shift_helper(self):
        shifted = minimal_polynomial_of(IntPoly([3, 1]), X72)
        assert shifted == X72.shift(-3)

    def test_square_on_kummer(self):
        assert minimal_polynomial_of(IntPoly([0, 0, 1]), X72) == IntPoly(
            [-4, 0, 0, 0, 0, 0, 0, 1]
        )

    def test_degenerate_transform_detected(self):
        # x -> x^2 is degenerate on x^7 - 1? use a poly with even symmetry:
        # on f with roots symmetric under negation, t = x^2 collapses pairs
        f = IntPoly([-1, 0, -1, 0, 0, 0, 0, 1])  # x^7 - x^2 - 1: no symmetry
        g = minimal_polynomial_of(IntPoly([0, 0, 1]), f)
        assert g.degree == 7
        sym = IntPoly([4, 0, -5, 0, 1])  # (x^2-1)(x^2-4)
        h = minimal_polynomial_of(IntPoly([0, 0, 1]), IntPoly([4, 0, -5, 0, 1]))
        assert not is_squarefree_z(h)

    def test_auto_retry(self):
        g, seed = tschirnhausen_auto(X72)
        assert g.degree == 7 and is_squarefree_z(g)
        assert is_irreducible_deg7(g)

    def test_group_preserved(self):
        # same splitting field: the 35-ic factor shapes agree
        f = IntPoly.from_descending([1, 0, -8, -2, 16, 6, -6, -2])
        g, _ = tschirnhausen_auto(f)
        assert factor_pattern(resolvent35_symbolic(f)) == factor_pattern(
            resolvent35_symbolic(g)
        )


class TestNumericResolvents:
    def test_quadratic_matches_discriminant(self):
        f = IntPoly.from_descending([1, 1, -12, -7, 28, 14, -9, 1])
        assert resolvent_numeric(f, ResolventKind.QUADRATIC) == IntPoly(
            [-discriminant7(f), 0, 1]
        )

    def test_quadratic_numeric_cross_check(self):
        import mpmath as mp

        from galois7.numroots import find_roots

        f = IntPoly.from_descending([1, 0, -8, -2, 16, 6, -6, -2])
        rs = find_roots(f, 60)
        with mp.workdps(70):
            prod = mp.mpc(1)
            for i in range(7):
                for j in range(i + 1, 7):
                    prod *= rs.roots[i] - rs.roots[j]
            delta = mp.re(prod * prod)
            assert abs(delta - mp.nint(delta)) < mp.mpf("1e-6")
            assert int(mp.nint(delta)) == discriminant7(f)

    def test_invariant_orbit_sizes(self):
        assert len(INVARIANT_30) == 7
        assert len(INVARIANT_120) == 14
        assert all(len(t) == 3 for t in INVARIANT_30 + INVARIANT_120)

    def test_thirty_on_s7_is_irreducible(self):
        f = IntPoly([-1, -1, 0, 0, 0, 0, 0, 1])  # S7 witness
        r30 = resolvent_numeric(f, ResolventKind.THIRTY)
        assert r30.degree == 30 and r30.is_monic()
        assert factor_pattern(r30) == (30,)

    def test_kummer_collision_then_retry(self):
        # early transforms keep too much of the scaled-roots-of-unity
        # structure; x^3 + x (seed 4) is the first that breaks the collisions
        with pytest.raises(DuplicateThetaError):
            resolvent_numeric(X72, ResolventKind.THIRTY)
        for seed in (1, 2, 3):
            with pytest.raises(DuplicateThetaError):
                resolvent_numeric(tschirnhausen(X72, seed), ResolventKind.THIRTY)
        g = tschirnhausen(X72, 4)
        r30 = resolvent_numeric(g, ResolventKind.THIRTY)
        assert factor_pattern(r30) == (2, 14, 14)

    def test_degree_checked(self):
        with pytest.raises(DomainError):
            resolvent_numeric(IntPoly([1, 1]), ResolventKind.THIRTY)


class TestAuxiliaryGd:
    def test_degree1_stand_in(self):
        g = auxiliary_gd(IntPoly([-5, 1]), 3)
        assert g == IntPoly([22, -10, 1])  # (x-5)^2 - 3

    def test_non_squarefree_d_rejected(self):
        with pytest.raises(DomainError):
            auxiliary_gd(IntPoly([-5, 1]), 4)
        with pytest.raises(DomainError):
            auxiliary_gd(IntPoly([-5, 1]), 12)

    def test_squarefree_one_allowed(self):
        # d = 1 is squarefree; g_1 = h(x-1) h(x+1), visibly reducible
        g = auxiliary_gd(IntPoly([-5, 1]), 1)
        assert g == IntPoly([-6, 1]) * IntPoly([-4, 1])

    def test_degree_and_integrality(self):
        rng = random.Random(5)
        h = IntPoly([rng.randint(-4, 4) for _ in range(21)] + [1])
        g = auxiliary_gd(h, -3)
        assert g.degree == 42 and g.is_monic()


class TestDump:
    def test_dump_line(self):
        line = dump_line(ResolventKind.QUADRATIC, IntPoly([-5, 0, 1]))
        assert line == "quadratic 2 1 0 -5"
