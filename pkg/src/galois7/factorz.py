"""Complete factorization over Z: mod-p kernels, Hensel lifting, recombination.

The engine is standard Zassenhaus tuned for the resolvent shapes this package
produces: a small deterministic window of candidate primes (fewest modular
factors wins), degree-set pruning intersected across primes, and staged
lifting with early trial division so structured inputs never pay the full
Mignotte-height lift.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import isqrt

from .intpoly import (
    DomainError,
    IntPoly,
    divmod_exact,
    poly_gcd,
    primitive_part,
    small_primes,
)

# ---------------------------------------------------------------------------
# dense arithmetic mod m on raw ascending coefficient lists


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, m):
    return _trim([c % m for c in a])


def _add(a, b, m):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _trim(out)


def _sub(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _trim(out)


def _mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim([c % m for c in out])


def _scal(a, k, m):
    k %= m
    return _trim([c * k % m for c in a])


def _divmod_unit(a, b, m):
    """Division by b whose leading coefficient is a unit mod m."""
    inv = pow(b[-1], -1, m)
    rem = [c % m for c in a]
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    q = [0] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db]
        if c:
            qi = c * inv % m
            q[i] = qi
            for j, cb in enumerate(b):
                rem[i + j] = (rem[i + j] - qi * cb) % m
    return _trim(q), _trim(rem)


def _gcd_modp(a, b, p):
    a, b = _mod(a, p), _mod(b, p)
    while b:
        _, r = _divmod_unit(a, b, p)
        a, b = b, r
    if a:
        a = _scal(a, pow(a[-1], -1, p), p)
    return a


def _deriv(a, m):
    return _trim([i * c % m for i, c in enumerate(a)][1:])


def _powmod(base, e, f, p):
    """base^e mod (f, p); lc(f) must be a unit mod p."""
    out = [1]
    base = _divmod_unit(base, f, p)[1]
    while e:
        if e & 1:
            out = _divmod_unit(_mul(out, base, p), f, p)[1]
        base = _divmod_unit(_mul(base, base, p), f, p)[1]
        e >>= 1
    return out


def _bezout_modp(a, b, p):
    """s, t with s*a + t*b = 1 mod p; requires gcd(a, b) = 1 mod p."""
    r0, r1 = _mod(a, p), _mod(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod_unit(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    if len(r0) != 1:
        raise ValueError("polynomials not coprime mod p")
    inv = pow(r0[0], -1, p)
    return _scal(s0, inv, p), _scal(t0, inv, p)


# ---------------------------------------------------------------------------
# factorization mod p (squarefree input)


def modp_degree_pattern(coeffs, p):
    """Degrees (with multiplicity) of the irreducible factors of f mod p,
    or None when the reduction is not squarefree or drops degree."""
    f = _mod(list(coeffs), p)
    if len(f) != len(coeffs):
        return None
    if _gcd_modp(f, _deriv(f, p), p) != [1]:
        return None
    return tuple(d for d, g in _ddf(f, p) for _ in range((len(g) - 1) // d))


def _ddf(f, p):
    """Distinct-degree split of squarefree f mod p: sorted (d, product) pairs."""
    f = _scal(f, pow(f[-1], -1, p), p)
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append((len(f) - 1, f))
            break
        h = _powmod(h, p, f, p)
        g = _gcd_modp(_sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((d, g))
            f, _ = _divmod_unit(f, g, p)
            if len(f) > 1:
                h = _divmod_unit(h, f, p)[1]
    return sorted(out)


def _edf(f, d, p, rng):
    """Cantor-Zassenhaus equal-degree split; f = product of deg-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    exp = (p ** d - 1) // 2
    while True:
        t = [rng.randrange(p) for _ in range(n - 1)] + [1]
        w = _powmod(t, exp, f, p)
        g = _gcd_modp(_sub(w, [1], p), f, p)
        if 1 < len(g) < len(f):
            rest, _ = _divmod_unit(f, g, p)
            return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def modp_factor_squarefree(coeffs, p):
    """Monic irreducible factors of f mod p (f squarefree mod p, p odd)."""
    f = _mod(list(coeffs), p)
    f = _scal(f, pow(f[-1], -1, p), p)
    rng = random.Random(0xF4C702 ^ (p << 8) ^ len(coeffs))
    out = []
    for d, block in _ddf(f, p):
        out.extend(_edf(block, d, p, rng))
    return sorted(out)


# ---------------------------------------------------------------------------
# Hensel lifting


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift step: inputs valid mod m, outputs valid mod m^2.

    Requires f = g*h (mod m), s*g + t*h = 1 (mod m), h monic.
    """
    m2 = m * m
    e = _sub(_mod(f, m2), _mul(g, h, m2), m2)
    q, r = _divmod_unit(_mul(s, e, m2), h, m2)
    g1 = _add(g, _add(_mul(t, e, m2), _mul(q, g, m2), m2), m2)
    h1 = _add(h, r, m2)
    b = _sub(_add(_mul(s, g1, m2), _mul(t, h1, m2), m2), [1], m2)
    c, d = _divmod_unit(_mul(s, b, m2), h1, m2)
    s1 = _sub(s, d, m2)
    t1 = _sub(_sub(t, _mul(t, b, m2), m2), _mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _lift_modulus(p, target):
    m = p
    while m < target:
        m *= m
    return m


def _lift_pair(f, g0, h0, p, target):
    """Lift f = g0*h0 (mod p) to the quadratic-ladder modulus >= target."""
    s, t = _bezout_modp(g0, h0, p)
    g, h = _mod(g0, p), _mod(h0, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return g, h


def _lift_tree(f, facs, p, target):
    """Monic factors mod m >= target with f = lc(f) * prod(facs) (mod m).

    facs are monic mod p, pairwise coprime; p must not divide lc(f).
    """
    m = _lift_modulus(p, target)
    if len(facs) == 1:
        inv = pow(f[-1] % m, -1, m)
        return [_scal(_mod(f, m), inv, m)], m
    half = (len(facs) + 1) // 2
    left, right = facs[:half], facs[half:]
    g0 = [f[-1] % p]
    for a in left:
        g0 = _mul(g0, a, p)
    h0 = [1]
    for a in right:
        h0 = _mul(h0, a, p)
    g, h = _lift_pair(f, g0, h0, p, target)
    lg, _ = _lift_tree(g, left, p, target)
    rg, _ = _lift_tree(h, right, p, target)
    return lg + rg, m


# ---------------------------------------------------------------------------
# Zassenhaus over Z


def _symmetric(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _choose_primes(f, want=5, scan_limit=300):
    """Deterministic window of usable primes with their mod-p degree patterns."""
    found = []
    for p in small_primes():
        if p < 5:
            continue
        if f.lc % p == 0:
            continue
        pat = modp_degree_pattern(f.coeffs, p)
        if pat is None:
            continue
        found.append((p, pat))
        if len(found) >= want or (p > scan_limit and found):
            break
    if not found:
        raise DomainError("no usable factorization prime found")
    return found


def _degree_mask(patterns, n):
    """Bitmask of degrees realizable as a sub-multiset sum, intersected."""
    full = None
    for pat in patterns:
        mask = 1
        for d in pat:
            mask |= mask << d
        full = mask if full is None else full & mask
    if full is None:
        full = (1 << (n + 1)) - 1
    full |= (1 << n) | 1
    return full


def _mask_proves_irreducible(mask, n):
    return all(not (mask >> d) & 1 for d in range(1, n))


def _recombine(f, lifted, m, mask, found, max_size, exhaustive):
    """Trial-divide subset products of lifted factors into f.

    Appends verified irreducible factors to `found`. Returns
    (remaining_f, surviving_local_indices). When `exhaustive`, every subset
    size up to half the survivor count is tried, so the remaining cofactor is
    irreducible and is appended too (remaining_f comes back as constant 1).
    """
    active = list(range(len(lifted)))
    lc_f = f.lc
    size = 1
    while active:
        cap = len(active) // 2
        if not exhaustive:
            cap = min(cap, max_size)
        if size > cap:
            break
        hit = None
        for combo in combinations(active, size):
            dsum = sum(len(lifted[i]) - 1 for i in combo)
            if dsum >= f.degree or not (mask >> dsum) & 1:
                continue
            t = lc_f % m
            for i in combo:
                t = t * lifted[i][0] % m
            t = _symmetric(t, m)
            if t == 0 or (f[0] * lc_f) % t != 0:
                continue
            prod = [lc_f % m]
            for i in combo:
                prod = _mul(prod, lifted[i], m)
            cand = IntPoly([_symmetric(c, m) for c in prod])
            if cand.is_zero:
                continue
            cand = primitive_part(cand)
            if cand.lc < 0:
                cand = -cand
            q, r = divmod_exact(f, cand)
            if q is None or not r.is_zero:
                continue
            hit = (combo, cand, q)
            break
        if hit is None:
            size += 1
            continue
        combo, cand, q = hit
        found.append(cand)
        f = q
        lc_f = f.lc
        active = [i for i in active if i not in combo]
        size = 1
        if f.degree == 0:
            return f, []
    if exhaustive and f.degree > 0:
        found.append(f)
        return IntPoly([1]), []
    return f, active


def factor_squarefree(f):
    """Irreducible factors of a primitive squarefree polynomial with lc > 0."""
    n = f.degree
    if n <= 0:
        return []
    if n == 1:
        return [f]
    out = []
    if f[0] == 0:
        out.append(IntPoly([0, 1]))
        f, _ = divmod_exact(f, IntPoly([0, 1]))
        if f.degree == 0:
            return out
        if f.degree == 1:
            return sorted(out + [f], key=lambda g: (g.degree, g.coeffs))
        n = f.degree

    primes = _choose_primes(f)
    mask = _degree_mask([pat for _, pat in primes], n)
    if _mask_proves_irreducible(mask, n):
        return sorted(out + [f], key=lambda g: (g.degree, g.coeffs))
    p, _ = min(primes, key=lambda it: (len(it[1]), it[0]))
    modfacs = modp_factor_squarefree(f.coeffs, p)

    norm2 = isqrt(f.norm2_sq()) + 1
    full_bound = 2 * (1 << n) * norm2 * abs(f.lc) + 1
    stages = []
    t = p ** 12
    while t < full_bound:
        stages.append(t)
        t = t * t
    stages.append(full_bound)

    current = f
    alive = list(range(len(modfacs)))
    for stage in stages:
        if current.degree <= 0:
            break
        if len(alive) == 1:
            out.append(current)
            current = IntPoly([1])
            break
        exhaustive = stage == full_bound
        lifted, m = _lift_tree(
            list(current.coeffs), [modfacs[i] for i in alive], p, stage
        )
        max_size = len(lifted) // 2 if exhaustive else 3
        current, surviving = _recombine(
            current, lifted, m, mask, out, max_size, exhaustive
        )
        alive = [alive[k] for k in surviving]
    if current.degree > 0:
        out.append(current)
    return sorted(out, key=lambda g: (g.degree, g.coeffs))


def squarefree_decomposition(f):
    """Yun's algorithm on a primitive polynomial with positive lc."""
    out = []
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    w, _ = divmod_exact(f, g)
    y, _ = divmod_exact(f.derivative(), g)
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        gi = poly_gcd(w, z)
        if gi.degree > 0:
            out.append((gi, i))
        w, _ = divmod_exact(w, gi)
        y, _ = divmod_exact(z, gi)
        z = y - w.derivative()
        i += 1
    return out


def is_squarefree_z(f, tries=12):
    """Squarefreeness over Z; a single clean mod-p certificate settles it."""
    if f.is_zero:
        return False
    if f.degree == 0:
        return True
    checked = 0
    for p in small_primes():
        if p < 5 or f.lc % p == 0:
            continue
        fm = _mod(list(f.coeffs), p)
        if len(fm) == len(f.coeffs) and _gcd_modp(fm, _deriv(fm, p), p) == [1]:
            return True
        checked += 1
        if checked >= tries:
            break
    return poly_gcd(f, f.derivative()).degree == 0


def factor_z(f):
    """Irreducible factors over Z with multiplicity.

    Factors are primitive with positive leading coefficient, sorted, and
    content(f) * prod(factor^mult) == f.
    """
    if f.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    prim = primitive_part(f)
    out = []
    k = 0
    while prim[0] == 0:
        prim, _ = divmod_exact(prim, IntPoly([0, 1]))
        k += 1
    if k:
        out.append((IntPoly([0, 1]), k))
    if prim.degree > 0:
        if is_squarefree_z(prim):
            blocks = [(prim, 1)]
        else:
            blocks = squarefree_decomposition(prim)
        for block, mult in blocks:
            for g in factor_squarefree(block):
                out.append((g, mult))
    return sorted(out, key=lambda it: (it[0].degree, it[0].coeffs))


def factor_pattern(f):
    """Sorted degrees (with multiplicity) of the irreducible factors."""
    degs = []
    for g, mult in factor_z(f):
        degs.extend([g.degree] * mult)
    return tuple(sorted(degs))


def is_irreducible_deg7(f):
    """Irreducibility over Q for degree-7 input, with fast mod-p screens.

    The screens (rational-root test, single mod-p irreducibility witness,
    degree-set intersection) never change the answer; undecided inputs fall
    back to full factorization.
    """
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    prim = primitive_part(f)
    if prim[0] == 0:
        return False
    if _has_rational_root(prim):
        return False
    patterns = []
    tried = 0
    for p in small_primes():
        if prim.lc % p == 0:
            continue
        tried += 1
        if tried > 24:
            break
        pat = modp_degree_pattern(prim.coeffs, p)
        if pat is None:
            continue
        if pat == (7,):
            return True
        patterns.append(pat)
        if len(patterns) >= 2 and _mask_proves_irreducible(
            _degree_mask(patterns, 7), 7
        ):
            return True
    return factor_pattern(prim) == (7,)


def _has_rational_root(f):
    """Exact rational-root test for a primitive polynomial."""
    from math import gcd as _gcd

    n = f.degree
    for p in _divisors(abs(f[0])):
        for q in _divisors(abs(f.lc)):
            if _gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                # q^n * f(sp/q)
                acc = 0
                for i, c in enumerate(f.coeffs):
                    acc += c * sp ** i * q ** (n - i)
                if acc == 0:
                    return True
    return False


def _divisors(n):
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
