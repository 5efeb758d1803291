import pytest

from galois7.classify import classify_35
from galois7.factorz import is_irreducible_deg7
from galois7.families import (
    CYCLOTOMIC_C7_TABLE,
    F21_MIN,
    chebyshev_g7,
    chebyshev_g7_monic,
    chebyshev_t,
    cyclotomic_c7,
    known_witnesses,
)
from galois7.intpoly import DomainError, IntPoly, discriminant7, is_perfect_square
from galois7.perm import GaloisLabel


class TestChebyshev:
    def test_t0_t2_t7(self):
        assert chebyshev_t(0) == IntPoly([1])
        assert chebyshev_t(1) == IntPoly([0, 1])
        assert chebyshev_t(2) == IntPoly([-1, 0, 2])
        assert chebyshev_t(7) == IntPoly.from_descending([64, 0, -112, 0, 56, 0, -7, 0])

    def test_recurrence(self):
        for n in range(2, 12):
            lhs = chebyshev_t(n + 1)
            rhs = IntPoly([0, 2]) * chebyshev_t(n) - chebyshev_t(n - 1)
            assert lhs == rhs

    def test_g7_published_value(self):
        assert chebyshev_g7(1, 1) == IntPoly.from_descending(
            [64, 0, -896, 0, 3584, 0, -3584, -512]
        )

    def test_g7_s_equals_one_case(self):
        # (u, v) = (1, 0): S = 1, so G7 = T7 - 1 evaluated structure
        assert chebyshev_g7(1, 0) == IntPoly.from_descending(
            [64, 0, -112, 0, 56, 0, -7, -1]
        )

    def test_monic_model_matches_scaling(self):
        # monic model is 2 * G7(y/2) expanded
        for (u, v) in [(1, 1), (2, 1), (1, 2)]:
            g = chebyshev_g7(u, v)
            m = chebyshev_g7_monic(u, v)
            # evaluate both ways at a few integers: m(2t) = 2*g(t)
            for t in range(-3, 4):
                assert m(2 * t) == 2 * g(t)

    def test_invalid_params(self):
        with pytest.raises(DomainError):
            chebyshev_g7(2, 2)
        with pytest.raises(DomainError):
            chebyshev_g7(7, 1)
        with pytest.raises(DomainError):
            chebyshev_g7(1, 14)

    def test_classifies_f21(self):
        f = chebyshev_g7_monic(1, 1)
        assert classify_35(f).label is GaloisLabel.F21


class TestCyclotomic:
    def test_p29_published_row(self):
        assert cyclotomic_c7(29) == IntPoly.from_descending(
            [1, 1, -12, -7, 28, 14, -9, 1]
        )

    def test_p43_p113(self):
        assert cyclotomic_c7(43, verify=False) == IntPoly.from_descending(
            [1, 1, -18, -35, 38, 104, 7, -49]
        )
        assert cyclotomic_c7(113, verify=False) == IntPoly.from_descending(
            [1, 1, -48, 37, 312, -12, -49, -1]
        )

    def test_disc_is_square(self):
        f = cyclotomic_c7(71, verify=False)
        assert is_perfect_square(discriminant7(f))

    def test_bad_prime_rejected(self):
        with pytest.raises(DomainError):
            cyclotomic_c7(31)  # prime but not 1 mod 7
        with pytest.raises(DomainError):
            cyclotomic_c7(28)  # not prime

    def test_fresh_prime_beyond_table(self):
        f = cyclotomic_c7(1009)
        assert f.is_monic() and f.degree == 7


class TestWitnesses:
    def test_heights_column(self):
        for row, height, p in CYCLOTOMIC_C7_TABLE:
            assert max(abs(c) for c in row) == height
            assert p % 7 == 1

    def test_corpus_contents(self):
        wits = dict(
            (tuple(f.to_descending()), label) for f, label in known_witnesses()
        )
        assert wits[(1, 1, -12, -7, 28, 14, -9, 1)] is GaloisLabel.C7
        assert wits[(1, 0, -8, -2, 16, 6, -6, -2)] is GaloisLabel.F21
        assert wits[(1, 0, 0, 0, 0, 0, 0, -2)] is GaloisLabel.F42
        labels = set(wits.values())
        assert labels == set(GaloisLabel)

    def test_all_irreducible(self):
        for f, _ in known_witnesses():
            assert is_irreducible_deg7(f)

    def test_fmin_constant(self):
        assert F21_MIN == IntPoly.from_descending([1, 0, -8, -2, 16, 6, -6, -2])
