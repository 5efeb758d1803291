"""Septic families with prescribed solvable Galois groups, plus the curated
witness corpus used throughout the tests.

The C7 route builds the degree-7 subfield of Q(zeta_p) for p = 1 mod 7 from
Gaussian periods, numerically at high precision with exact verification. The
C7:C3 route is the Chebyshev family G7(x; u, v) with S = u^2 + 7 v^2.
"""

from __future__ import annotations

from math import gcd

import mpmath as mp

from .classify import classify_35
from .factorz import is_irreducible_deg7
from .intpoly import DomainError, IntPoly
from .perm import GaloisLabel


def chebyshev_t(n):
    """Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    prev, cur = IntPoly([1]), IntPoly([0, 1])
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, IntPoly([0, 2]) * cur - prev
    return cur


def _check_params(u, v):
    if gcd(u, v) != 1:
        raise DomainError("parameters must be coprime")
    # the group-preservation condition applies to nonzero parameters; zero
    # parameters are allowed for closed-form evaluation (every emitted
    # specialization is re-verified by classification anyway)
    if (u and u % 7 == 0) or (v and v % 7 == 0):
        raise DomainError("7 must not divide either parameter")


def chebyshev_g7(u, v):
    """G7(x; u, v) = 64x^7 - 112S x^5 + 56S^2 x^3 - 7S^3 x - uS^3, S = u^2+7v^2.

    This is S^(7/2) T_7(x / sqrt(S)) - u S^3, which is integral because T_7
    has only odd-degree terms.
    """
    _check_params(u, v)
    s = u * u + 7 * v * v
    return IntPoly([-u * s ** 3, -7 * s ** 3, 0, 56 * s * s, 0, -112 * s, 0, 64])


def chebyshev_g7_monic(u, v):
    """The monic integral model of G7 under y = 2x:
    y^7 - 7S y^5 + 14 S^2 y^3 - 7 S^3 y - 2u S^3."""
    _check_params(u, v)
    s = u * u + 7 * v * v
    return IntPoly([-2 * u * s ** 3, -7 * s ** 3, 0, 14 * s * s, 0, -7 * s, 0, 1])


def _smallest_primitive_root(p):
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise DomainError(f"{p} is not prime")


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def cyclotomic_c7(p, verify=True):
    """Minimal polynomial of the degree-7 Gaussian period of Q(zeta_p).

    The seven conjugate periods eta_j = sum over the index-7 power coset of
    zeta_p^(g^(7k+j)) are computed numerically; the elementary symmetric
    values are rounded to integers and the result is verified exactly.
    """
    if not _is_prime(p) or p % 7 != 1:
        raise DomainError("p must be a prime congruent to 1 mod 7")
    g = _smallest_primitive_root(p)
    cosets = [[] for _ in range(7)]
    e = 1
    for k in range(p - 1):
        cosets[k % 7].append(e)
        e = e * g % p
    for digits in (60, 120, 240):
        with mp.workdps(digits):
            periods = []
            for j in range(7):
                acc = mp.mpc(0)
                for a in cosets[j]:
                    acc += mp.expjpi(mp.mpf(2 * a) / p)
                periods.append(acc)
            es = [mp.mpc(1)]
            for r in periods:
                es = (
                    [es[0]]
                    + [es[k] + r * es[k - 1] for k in range(1, len(es))]
                    + [r * es[-1]]
                )
            coeffs = [0] * 8
            coeffs[7] = 1
            ok = True
            for k in range(1, 8):
                val = mp.re(es[k])
                rounded = int(mp.nint(val))
                if abs(val - rounded) > mp.mpf("0.2") or abs(mp.im(es[k])) > mp.mpf("0.2"):
                    ok = False
                    break
                coeffs[7 - k] = -rounded if k % 2 else rounded
            if ok:
                break
    if not ok:
        raise DomainError(f"period rounding failed for p = {p}")
    f = IntPoly(coeffs)
    if verify:
        if not is_irreducible_deg7(f):
            raise DomainError(f"period polynomial for p = {p} is not irreducible")
        label = classify_35(f).label
        if label is not GaloisLabel.C7:
            raise DomainError(f"period polynomial for p = {p} classified {label.value}")
    return f


# (coefficients a7..a0, height, p) for the 28 cyclotomic C7 generators
CYCLOTOMIC_C7_TABLE = (
    ((1, 1, -12, -7, 28, 14, -9, 1), 28, 29),
    ((1, 1, -18, -35, 38, 104, 7, -49), 104, 43),
    ((1, 1, -30, 3, 254, -246, -245, 137), 254, 71),
    ((1, 1, -48, 37, 312, -12, -49, -1), 312, 113),
    ((1, 1, -54, -31, 558, -32, -1713, 1121), 1713, 127),
    ((1, 1, -84, -217, 1348, 3988, -1433, -1163), 3988, 197),
    ((1, 1, -90, 69, 1306, 124, -5249, -4663), 5249, 211),
    ((1, 1, -102, -195, 1850, 978, -8933, 5183), 8933, 239),
    ((1, 1, -120, -711, -784, 1956, 2863, -343), 2863, 281),
    ((1, 1, -144, 399, 2416, -10808, 10831, -1237), 10831, 337),
    ((1, 1, -162, -201, 7822, 12322, -107717, -193369), 193369, 379),
    ((1, 1, -180, -103, 6180, 11596, -25209, -49213), 49213, 421),
    ((1, 1, -192, 275, 3952, 4136, -81, -863), 4136, 449),
    ((1, 1, -198, -907, 4302, 20582, -18973, -56911), 56911, 463),
    ((1, 1, -210, 1423, -1410, -8538, 9203, 19427), 19427, 491),
    ((1, 1, -234, 335, 13254, -42874, -55309, 71879), 71879, 547),
    ((1, 1, -264, -151, 13288, 18556, -69425, 34621), 69425, 617),
    ((1, 1, -270, 116, 19848, -31904, -375552, 720896), 720896, 631),
    ((1, 1, -282, 1345, 5370, -30042, -14893, 115169), 115169, 659),
    ((1, 1, -288, 316, 23504, -53056, -541952, 1722368), 1722368, 673),
    ((1, 1, -300, 1631, 5140, -23794, -59049, -18773), 59049, 701),
    ((1, 1, -318, -1031, 26070, 125148, -420841, -2302639), 2302639, 743),
    ((1, 1, -324, -1483, 20876, 129744, 36999, -54027), 129744, 757),
    ((1, 1, -354, 979, 30030, -111552, -715705, 2921075), 2921075, 827),
    ((1, 1, -378, -973, 13106, -9624, -64665, 91125), 91125, 883),
    ((1, 1, -390, -223, 18058, 30856, -116657, -225929), 225929, 911),
    ((1, 1, -408, 992, 48064, -204560, -1603520, 8290816), 8290816, 953),
    ((1, 1, -414, -4381, -10434, 32702, 167651, 182573), 182573, 967),
)

F21_MIN = IntPoly.from_descending((1, 0, -8, -2, 16, 6, -6, -2))

# verified by exact classification through two independent routes plus the
# mod-p census cross-check (see tests)
_EXTRA_WITNESSES = (
    ((1, 0, 0, 0, 0, 0, 0, -2), GaloisLabel.F42),       # Kummer: x^7 - 2
    ((1, 0, 0, 0, 0, 0, -1, -1), GaloisLabel.S7),       # x^7 - x - 1
    ((1, 0, 0, 0, 0, 0, -7, 3), GaloisLabel.PSL32),     # x^7 - 7x + 3
    ((1, 0, 0, 0, 0, 0, -56, -48), GaloisLabel.A7),     # x^7 - 56x - 48
)

# D7 witnesses found by the height-bounded cycle-type search (scripts/)
_D7_WITNESSES = (
    ((1, -2, -1, 1, 1, 1, -1, -1), GaloisLabel.D7),
    ((1, -1, -1, 1, -1, -1, 2, 1), GaloisLabel.D7),
    ((1, 1, -1, -1, -1, 1, 2, -1), GaloisLabel.D7),
    ((1, 2, -1, -1, 1, -1, -1, 1), GaloisLabel.D7),
)


def known_witnesses():
    """Curated (polynomial, label) corpus: all 28 cyclotomic C7 rows, the
    minimal C7:C3 septic, and verified representatives of the other groups."""
    out = [
        (IntPoly.from_descending(row), GaloisLabel.C7)
        for row, _, _ in CYCLOTOMIC_C7_TABLE
    ]
    out.append((F21_MIN, GaloisLabel.F21))
    for row, label in _EXTRA_WITNESSES + _D7_WITNESSES:
        out.append((IntPoly.from_descending(row), label))
    return out
