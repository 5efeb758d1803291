"""Resolvents of septics.

The 35-ic (3-set sums) is built symbolically: power sums of the triple sums
collapse to polynomial expressions in the root power sums by inclusion-
exclusion over index coincidences, and Newton's identities convert those to
the elementary symmetric coefficients, all exactly. The 30-ic and 120-ic use
the numeric route: high-precision roots, orbit evaluation of the invariant
over coset representatives, numeric Newton, then integer rounding with a
strict tolerance.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import combinations
from math import comb, log10

import mpmath as mp

from .intpoly import DomainError, IntPoly, discriminant7
from .factorz import is_squarefree_z
from .numroots import find_roots
from .perm import FANO_LINES, GaloisLabel, catalog, cosets


class ResolventKind(enum.Enum):
    QUADRATIC = "quadratic"
    THIRTY = "30ic"
    HUNDRED_TWENTY = "120ic"
    THREE_SET_35 = "35ic"

    @property
    def degree(self):
        return {"quadratic": 2, "30ic": 30, "120ic": 120, "35ic": 35}[self.value]


class DuplicateThetaError(RuntimeError):
    """Two orbit values coincide numerically; a Tschirnhausen retry is needed."""


class PrecisionExhaustedError(RuntimeError):
    pass


# the 30-ic invariant: sum of the 7 line products of the Fano plane
INVARIANT_30 = tuple(tuple(sorted(line)) for line in FANO_LINES)

# the 120-ic invariant: sum of triple products over the size-14 orbit of
# {0,2,3} under F42 = <x+1, 3x>; its full S7-stabilizer is exactly that F42
def _f42_orbit_triples():
    f42 = catalog()[GaloisLabel.F42]
    seed = frozenset((0, 2, 3))
    orbit = {seed}
    frontier = [seed]
    while frontier:
        s = frontier.pop()
        for g in f42.generators:
            t = frozenset(g[i] for i in s)
            if t not in orbit:
                orbit.add(t)
                frontier.append(t)
    return tuple(sorted(tuple(sorted(s)) for s in orbit))


INVARIANT_120 = _f42_orbit_triples()

_TRIPLES_35 = tuple(combinations(range(7), 3))


def root_power_sums(f, upto):
    """Exact power sums of the roots of monic integer f, via Newton."""
    if not f.is_monic():
        raise DomainError("power sums require a monic polynomial")
    n = f.degree
    ps = [n]
    for k in range(1, upto + 1):
        s = 0
        for j in range(1, min(k - 1, n) + 1):
            s += f[n - j] * ps[k - j]
        ps.append(-s - k * f[n - k] if k <= n else -s)
    return ps


def _newton_e_exact(psums, k):
    """Elementary symmetric values e_1..e_k from power sums p_1..p_k, exact."""
    es = [Fraction(1)]
    for j in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            term = Fraction(psums[i]) * es[j - i]
            acc += term if (i - 1) % 2 == 0 else -term
        es.append(acc / j)
    return es


def triple_sum_power_sums(f, upto=35):
    """Exact power sums of the 35 values alpha_i+alpha_j+alpha_k (i<j<k)."""
    q = root_power_sums(f, upto)
    # W[s] = sum_b C(s,b) q_b q_(s-b)
    W = []
    for s in range(upto + 1):
        W.append(sum(comb(s, b) * q[b] * q[s - b] for b in range(s + 1)))
    out = []
    for m in range(1, upto + 1):
        t_all = sum(comb(m, a) * q[a] * W[m - a] for a in range(m + 1))
        s2 = sum(comb(m, a) * (2 ** a) * q[a] * q[m - a] for a in range(m + 1))
        s3 = (3 ** m) * q[m]
        num = t_all - 3 * s2 + 2 * s3
        assert num % 6 == 0
        out.append(num // 6)
    return out


def resolvent35_symbolic(f):
    """The exact degree-35 resolvent whose roots are the 3-set root sums."""
    if f.degree != 7 or not f.is_monic():
        raise DomainError("resolvent requires a monic degree-7 polynomial")
    psums = [None] + triple_sum_power_sums(f, 35)
    es = _newton_e_exact(psums, 35)
    coeffs = [0] * 36
    coeffs[35] = 1
    for k in range(1, 36):
        e = es[k]
        assert e.denominator == 1, f"non-integral e_{k} = {e}"
        coeffs[35 - k] = -e.numerator if k % 2 else e.numerator
    return IntPoly(coeffs)


def symbolic_e1_e2(f):
    """The two leading elementary symmetric values of the 35-ic, exact."""
    ps = triple_sum_power_sums(f, 2)
    e1 = ps[0]
    e2 = (e1 * ps[0] - ps[1]) // 2
    return e1, e2


# ---------------------------------------------------------------------------
# Tschirnhausen transformations


def transform_for_seed(seed):
    """Deterministic small transforms: seed 0 is the identity map x."""
    if seed == 0:
        return IntPoly([0, 1])
    k = seed - 1
    exponent = 2 + (k % 2)
    j = k // 2
    c = ((j + 1) // 2) * (1 if j % 2 else -1) if j else 0
    coeffs = [0] * (exponent + 1)
    coeffs[exponent] = 1
    coeffs[1] = c
    return IntPoly(coeffs)


def minimal_polynomial_of(t, f):
    """Characteristic polynomial of multiplication by t(x) in Q[x]/(f).

    f monic of degree n; the result is the monic degree-n integer polynomial
    whose roots are t(alpha) over the roots alpha of f.
    """
    if not f.is_monic():
        raise DomainError("modulus must be monic")
    n = f.degree
    # t reduced mod f
    t_red = _poly_mod_monic(t, f)
    # multiplication matrix: column j = x^j * t_red mod f
    cols = []
    cur = t_red
    for j in range(n):
        cols.append([cur[i] for i in range(n)])
        cur = _poly_mod_monic(IntPoly([0] + list(cur.coeffs)), f)
    # traces of powers
    mat = [[cols[j][i] for j in range(n)] for i in range(n)]
    traces = []
    power = mat
    for _ in range(n):
        traces.append(sum(power[i][i] for i in range(n)))
        power = _mat_mul(power, mat)
    es = _newton_e_exact([None] + traces, n)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        e = es[k]
        assert e.denominator == 1
        coeffs[n - k] = -e.numerator if k % 2 else e.numerator
    return IntPoly(coeffs)


def _poly_mod_monic(a, f):
    rem = list(a.coeffs)
    n = f.degree
    for i in range(len(rem) - 1, n - 1, -1):
        c = rem[i]
        if c:
            for j in range(n + 1):
                rem[i - n + j] -= c * f[j]
            rem[i] = 0
    return IntPoly(rem[:n])


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


class DegenerateTransformError(RuntimeError):
    """The transform did not produce a primitive element."""


def tschirnhausen(f, seed):
    """Same splitting field, new generator: minimal polynomial of t(alpha)."""
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    t = transform_for_seed(seed)
    g = minimal_polynomial_of(t, f)
    if not is_squarefree_z(g):
        raise DegenerateTransformError(f"seed {seed} gives a non-primitive element")
    return g


def tschirnhausen_auto(f, start_seed=1, tries=24):
    for seed in range(start_seed, start_seed + tries):
        try:
            return tschirnhausen(f, seed), seed
        except DegenerateTransformError:
            continue
    raise DegenerateTransformError("no primitive transform found")


# ---------------------------------------------------------------------------
# numeric resolvents


def _theta_values(roots, reps, triples):
    out = []
    for sigma in reps:
        acc = mp.mpc(0)
        for tri in triples:
            term = mp.mpc(1)
            for i in tri:
                term *= roots[sigma[i]]
            acc += term
        out.append(acc)
    return out


def _estimate_digits(f, kind, triples):
    bound = 1 + max(abs(c) for c in f.coeffs[:-1]) / abs(f.lc)
    theta_bound = max(len(triples), 1) * bound ** 3
    return int(kind.degree * (log10(theta_bound) + 0.35)) + 40


_DEFAULT_DIGITS = {
    ResolventKind.THIRTY: 100,
    ResolventKind.HUNDRED_TWENTY: 200,
    ResolventKind.THREE_SET_35: 100,
}


def resolvent_numeric(f, kind, precision=None, invariant_triples=None, max_attempts=4):
    """Numeric resolvent construction with integer rounding.

    Every coefficient must land within 0.4 of an integer or the working
    precision doubles; coinciding orbit values raise DuplicateThetaError so
    the caller can apply a Tschirnhausen transformation.
    """
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    if kind is ResolventKind.QUADRATIC:
        return IntPoly([-discriminant7(f), 0, 1])
    if invariant_triples is None:
        triples = {
            ResolventKind.THIRTY: INVARIANT_30,
            ResolventKind.HUNDRED_TWENTY: INVARIANT_120,
            ResolventKind.THREE_SET_35: _TRIPLES_35,
        }[kind]
    else:
        triples = invariant_triples
    if kind is ResolventKind.THREE_SET_35:
        reps = [tuple(range(7))]
    else:
        cat = catalog()
        stab = cat[GaloisLabel.PSL32] if kind is ResolventKind.THIRTY else cat[GaloisLabel.F42]
        reps = cosets(stab, cat[GaloisLabel.S7])

    digits = max(
        precision or 0, _DEFAULT_DIGITS[kind], _estimate_digits(f, kind, triples)
    )
    for _ in range(max_attempts):
        try:
            return _numeric_once(f, kind, reps, triples, digits)
        except PrecisionExhaustedError:
            digits *= 2
    raise PrecisionExhaustedError(
        f"{kind.value} resolvent did not round at {digits // 2} digits"
    )


def _numeric_once(f, kind, reps, triples, digits):
    rootset = find_roots(f, digits)
    deg = kind.degree
    with mp.workdps(digits + 12):
        roots = list(rootset.roots)
        if kind is ResolventKind.THREE_SET_35:
            thetas = [sum(roots[i] for i in tri) for tri in triples]
        else:
            thetas = _theta_values(roots, reps, triples)
        if len(thetas) != deg:
            raise DomainError("orbit size does not match resolvent degree")
        # duplicate detection at half working precision; a window scan over
        # the real-part order catches pairs any third value interleaves
        tol = mp.mpf(10) ** (-(digits // 2))
        scale = max(mp.mpf(1), max(abs(t) for t in thetas))
        eps = tol * scale
        ordered = sorted(thetas, key=lambda z: (mp.re(z), mp.im(z)))
        for i in range(len(ordered)):
            j = i + 1
            while j < len(ordered) and mp.re(ordered[j]) - mp.re(ordered[i]) < eps:
                if abs(ordered[i] - ordered[j]) < eps:
                    raise DuplicateThetaError("orbit values collide")
                j += 1
        psums = []
        powers = [mp.mpc(1)] * deg
        for _ in range(deg):
            acc = mp.mpc(0)
            for i in range(deg):
                powers[i] *= thetas[i]
                acc += powers[i]
            psums.append(acc)
        es = [mp.mpf(1)]
        for j in range(1, deg + 1):
            acc = mp.mpc(0)
            for i in range(1, j + 1):
                term = psums[i - 1] * es[j - i]
                acc = acc + term if (i - 1) % 2 == 0 else acc - term
            es.append(acc / j)
        coeffs = [0] * (deg + 1)
        coeffs[deg] = 1
        for k in range(1, deg + 1):
            val = mp.re(es[k])
            rounded = int(mp.nint(val))
            if abs(val - rounded) > mp.mpf("0.4") or abs(mp.im(es[k])) > mp.mpf("0.4"):
                raise PrecisionExhaustedError(f"coefficient e_{k} off-integer")
            coeffs[deg - k] = -rounded if k % 2 else rounded
        return IntPoly(coeffs)


def auxiliary_gd(h21, d):
    """g_d(x) = prod_k ((x - b_k)^2 - d) over the roots b_k of h21, exact.

    Built in Z[sqrt(d)]: h21(x+t) = A + tB with t^2 = d, and g_d = A^2 - d B^2.
    """
    if h21.is_zero:
        raise DomainError("zero polynomial")
    from .intpoly import squarefree_part

    split = squarefree_part(d) if d not in (0,) else None
    if d == 0 or split.s != 1:
        raise DomainError(f"d = {d} is not squarefree")
    a_part, b_part = _shift_by_sqrt(h21, d)
    return a_part * a_part - d * (b_part * b_part)


def _shift_by_sqrt(h, d):
    """h(x + t) as (A(x), B(x)) with h(x+t) = A + t*B and t^2 = d."""
    cur_a, cur_b = [1], [0]  # (x+t)^0
    tot_a = [0] * (h.degree + 1)
    tot_b = [0] * (h.degree + 1)
    for j in range(h.degree + 1):
        cj = h[j]
        if cj:
            for i, c in enumerate(cur_a):
                tot_a[i] += cj * c
            for i, c in enumerate(cur_b):
                tot_b[i] += cj * c
        new_a = [0] + cur_a
        new_b = [0] + cur_b
        for i, c in enumerate(cur_b):
            new_a[i] += d * c
        for i, c in enumerate(cur_a):
            new_b[i] += c
        cur_a, cur_b = new_a, new_b
    return IntPoly(tot_a), IntPoly(tot_b)


def dump_line(kind, poly):
    """CLI dump format: kind, degree, then coefficients high to low."""
    return " ".join(
        [kind.value, str(poly.degree)] + [str(c) for c in poly.to_descending()]
    )
