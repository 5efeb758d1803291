"""Dense univariate polynomials over Z: exact arithmetic, resultants, discriminants.

Coefficients are Python ints stored ascending (index = exponent). The zero
polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


class DomainError(ValueError):
    """Raised when an operation's mathematical precondition is violated."""


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Immutable dense polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def from_descending(cls, coeffs):
        """Build from a_n, ..., a_0 order (the canonical tuple order)."""
        return cls(list(reversed(list(coeffs))))

    @classmethod
    def x_power(cls, n, c=1):
        return cls([0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = IntPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c):
        """f(x + c), exact."""
        out = IntPoly()
        xp = IntPoly([1])
        step = IntPoly([c, 1])
        for a in self.coeffs:
            out = out + xp * a
            xp = xp * step
        return out

    def reverse(self):
        """x^deg * f(1/x)."""
        return IntPoly(list(reversed(self.coeffs)))

    def max_abs(self):
        return max((abs(c) for c in self.coeffs), default=0)

    def norm2_sq(self):
        return sum(c * c for c in self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def to_descending(self):
        return tuple(reversed(self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if not c:
                continue
            term = "" if (abs(c) == 1 and i) else str(abs(c))
            if i == 1:
                term += "x" if not term else "*x"
            elif i > 1:
                term += f"x^{i}" if not term else f"*x^{i}"
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def parse_coeffs(text, ascending=False):
    """Parse a comma-separated coefficient list (canonical order a_n,...,a_0)."""
    items = [t.strip() for t in text.split(",") if t.strip()]
    try:
        vals = [int(t) for t in items]
    except ValueError as exc:
        raise DomainError(f"malformed coefficient list: {exc}") from None
    if not vals:
        raise DomainError("empty coefficient list")
    return IntPoly(vals) if ascending else IntPoly.from_descending(vals)


def format_coeffs(f, ascending=False):
    cs = f.coeffs if ascending else f.to_descending()
    return ",".join(str(c) for c in cs)


def content(f):
    """Signed content: gcd of coefficients carrying the sign of the leading one."""
    if f.is_zero:
        return 0
    g = 0
    for c in f.coeffs:
        g = gcd(g, abs(c))
        if g == 1:
            break
    return g if f.lc > 0 else -g


def primitive_part(f):
    c = content(f)
    return IntPoly([a // c for a in f.coeffs])


def divmod_exact(f, g):
    """Division in Q[x] that must stay in Z[x]; raises if any step fails."""
    if g.is_zero:
        raise DomainError("division by zero polynomial")
    rem = list(f.coeffs)
    dg, lg = g.degree, g.lc
    if f.degree < dg:
        return IntPoly(), f
    q = [0] * (f.degree - dg + 1)
    for i in range(f.degree - dg, -1, -1):
        c = rem[i + dg]
        if c % lg:
            return None, None
        qi = c // lg
        q[i] = qi
        if qi:
            for j, cg in enumerate(g.coeffs):
                rem[i + j] -= qi * cg
    return IntPoly(q), IntPoly(rem)


def pseudo_rem(f, g):
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, exact in Z[x]."""
    d = f.degree - g.degree
    if d < 0:
        return f
    lg = g.lc
    rem = list(f.coeffs)
    for i in range(d, -1, -1):
        top = rem[i + g.degree]
        for j in range(len(rem)):
            rem[j] *= lg
        if top:
            for j, cg in enumerate(g.coeffs):
                rem[i + j] -= top * cg
        assert rem[i + g.degree] == 0
    return IntPoly(rem[: g.degree])


def poly_gcd(f, g):
    """Primitive gcd in Z[x] with positive leading coefficient."""
    if f.is_zero:
        return primitive_part(g) if not g.is_zero else IntPoly()
    if g.is_zero:
        return primitive_part(f)
    a, b = primitive_part(f), primitive_part(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = pseudo_rem(a, b)
        a, b = b, (primitive_part(r) if not r.is_zero else IntPoly())
    return a if a.lc > 0 else -a


def is_squarefree(f):
    if f.is_zero:
        return False
    return poly_gcd(f, f.derivative()).degree == 0


def resultant(p, q):
    """Res(p, q): determinant of the Sylvester matrix, by a fraction-free
    primitive remainder sequence with exact multiplier bookkeeping.

    Uses Res(A,B) = (-1)^(deg A deg B) Res(B,A), Res(A,b) = b^(deg A), and
    for the pseudo-remainder lc(B)^d A = QB + R (d = deg A - deg B + 1):
    Res(A,B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R - d deg B) Res(B,R).
    """
    from fractions import Fraction

    if p.is_zero or q.is_zero:
        raise DomainError("resultant of the zero polynomial")
    acc = Fraction(1)
    A, B = p, q
    if A.degree < B.degree:
        if (A.degree & 1) and (B.degree & 1):
            acc = -acc
        A, B = B, A
    while B.degree > 0:
        m, n, ell = A.degree, B.degree, B.lc
        d = m - n + 1
        R = pseudo_rem(A, B)
        if R.is_zero:
            return 0
        acc *= Fraction(-1) ** (m * n) * Fraction(ell) ** (m - R.degree - d * n)
        # Res(B, R) = content(R)^deg(B) * Res(B, primitive(R))
        c = content(R)
        acc *= Fraction(c) ** n
        A, B = B, primitive_part(R)
    acc *= Fraction(B.lc) ** A.degree
    assert acc.denominator == 1
    return int(acc)


def discriminant7(f):
    """Discriminant of a degree-7 polynomial: -Res(f, f') / lc(f)."""
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    r = resultant(f, f.derivative())
    assert r % f.lc == 0
    return -(r // f.lc)


def is_perfect_square(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


_SMALL_PRIME_LIMIT = 10 ** 6
_small_primes_cache = None


def small_primes():
    """Primes below 10^6, sieved once."""
    global _small_primes_cache
    if _small_primes_cache is None:
        limit = _SMALL_PRIME_LIMIT
        sieve = bytearray([1]) * limit
        sieve[0] = sieve[1] = 0
        for i in range(2, isqrt(limit) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray((limit - i * i + i - 1) // i)
        _small_primes_cache = [i for i in range(limit) if sieve[i]]
    return _small_primes_cache


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class SquarefreeSplit:
    """n = d * s^2 with |d| squarefree when certain is True."""

    d: int
    s: int
    certain: bool


def squarefree_part(n):
    """Split n = d*s^2, sign(d) = sign(n). Trial division below 10^6, then
    square / primality probes on the cofactor; ambiguous cofactors are flagged."""
    if n == 0:
        raise DomainError("squarefree part of 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    d, s = 1, 1
    for p in small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e & 1:
                d *= p
    certain = True
    if m > 1:
        r = isqrt(m)
        if r * r == m:
            # the squarefree part of a perfect square is 1 regardless of the
            # root's own structure
            s *= r
        elif _is_probable_prime(m):
            d *= m
        else:
            # composite non-square with all prime factors > 10^6: a square
            # divisor would force m >= 10^18
            d *= m
            certain = m < 10 ** 18
    return SquarefreeSplit(sign * d, s, certain)
