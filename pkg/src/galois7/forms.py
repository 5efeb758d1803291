"""Binary-form calculus: transvectants, the degree-7 invariant generators,
and exact real-root signatures.

A form of degree d is stored as d+1 exact rational coefficients, coeffs[i]
multiplying x^i y^(d-i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .intpoly import DomainError, IntPoly, poly_gcd


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise DomainError("coefficient count must be degree + 1")

    @classmethod
    def from_coeffs(cls, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        return cls(len(cs) - 1, cs)

    @classmethod
    def from_int_poly(cls, f, degree=7):
        """Homogenize f to the given degree: sum a_i x^i y^(degree-i)."""
        if f.degree > degree:
            raise DomainError("polynomial degree exceeds form degree")
        return cls(degree, tuple(Fraction(f[i]) for i in range(degree + 1)))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise DomainError("cannot add forms of different degrees")
        return BinaryForm(
            self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BinaryForm(self.degree, tuple(c * other for c in self.coeffs))
        d = self.degree + other.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(d, tuple(out))

    __rmul__ = __mul__

    def pow(self, n):
        out = BinaryForm(0, (Fraction(1),))
        for _ in range(n):
            out = out * self
        return out

    def diff_x(self):
        if self.degree == 0:
            return BinaryForm(0, (Fraction(0),))
        return BinaryForm(
            self.degree - 1, tuple(i * self.coeffs[i] for i in range(1, self.degree + 1))
        )

    def diff_y(self):
        if self.degree == 0:
            return BinaryForm(0, (Fraction(0),))
        return BinaryForm(
            self.degree - 1,
            tuple((self.degree - i) * self.coeffs[i] for i in range(self.degree)),
        )

    def substitute(self, a, b, c, d):
        """The form composed with (x, y) -> (a x + b y, c x + d y)."""
        n = self.degree
        xs = [None] * (n + 1)  # (a x + b y)^i
        ys = [None] * (n + 1)
        xs[0] = ys[0] = BinaryForm(0, (Fraction(1),))
        lin_x = BinaryForm(1, (Fraction(b), Fraction(a)))  # a x + b y
        lin_y = BinaryForm(1, (Fraction(d), Fraction(c)))
        for i in range(1, n + 1):
            xs[i] = xs[i - 1] * lin_x
            ys[i] = ys[i - 1] * lin_y
        out = BinaryForm(n, tuple(Fraction(0) for _ in range(n + 1)))
        for i, coef in enumerate(self.coeffs):
            if coef:
                out = out + coef * (xs[i] * ys[n - i])
        return out

    def scalar(self):
        if self.degree != 0:
            raise DomainError("not a degree-0 form")
        return self.coeffs[0]


def transvectant(f, g, r):
    """The r-th transvectant with the classical factorial normalization:

    (f, g)_r = ((m-r)! (n-r)!)/(m! n!) *
               sum_k (-1)^k C(r, k) d^r f/dx^(r-k) dy^k * d^r g/dx^k dy^(r-k)
    """
    m, n = f.degree, g.degree
    if r > min(m, n):
        raise DomainError(f"transvectant order {r} too large for degrees {m},{n}")
    pref = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    # partial derivative ladders
    fx = [f]
    for _ in range(r):
        fx.append(fx[-1].diff_x())
    # fx[i] = d^i f / dx^i; then apply y-derivatives
    total = BinaryForm(m + n - 2 * r, tuple(Fraction(0) for _ in range(m + n - 2 * r + 1)))
    for k in range(r + 1):
        df = fx[r - k]
        for _ in range(k):
            df = df.diff_y()
        dg = g
        for _ in range(k):
            dg = dg.diff_x()
        for _ in range(r - k):
            dg = dg.diff_y()
        term = df * dg
        if k & 1:
            term = term * Fraction(-comb(r, k))
        else:
            term = term * Fraction(comb(r, k))
        total = total + term
    return total * pref


@dataclass(frozen=True)
class InvariantVector:
    """The five invariant generators of binary septics, exact."""

    xi0: Fraction
    xi1: Fraction
    xi2: Fraction
    xi3: Fraction
    xi4: Fraction

    # degrees in the coefficients of f, derived from the transvectant chain
    DEGREES = (4, 8, 12, 12, 20)

    def as_tuple(self):
        return (self.xi0, self.xi1, self.xi2, self.xi3, self.xi4)

    def as_strings(self):
        return tuple(
            f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
            for v in self.as_tuple()
        )


def invariants_xi(f):
    """Invariants of a degree-7 binary form via the iterated transvectants

    c1=(f,f)_6, c2=(f,f)_4, c4=(f,c1)_2, c5=(c2,c2)_4, c7=(c4,c4)_4,
    xi0=(c1,c1)_2, xi1=(c7,c1)_2, xi2=((c5,c5)_2,c5)_4,
    xi3=((c4,c4)_2,c1^3)_6, xi4=([(c2,c5)_4]^2,(c5,c5)_2)_4.
    """
    if f.degree != 7:
        raise DomainError(f"expected a degree-7 form, got degree {f.degree}")
    c1 = transvectant(f, f, 6)
    c2 = transvectant(f, f, 4)
    c4 = transvectant(f, c1, 2)
    c5 = transvectant(c2, c2, 4)
    c7 = transvectant(c4, c4, 4)
    xi0 = transvectant(c1, c1, 2).scalar()
    xi1 = transvectant(c7, c1, 2).scalar()
    xi2 = transvectant(transvectant(c5, c5, 2), c5, 4).scalar()
    xi3 = transvectant(transvectant(c4, c4, 2), c1.pow(3), 6).scalar()
    xi4 = transvectant(
        transvectant(c2, c5, 4).pow(2), transvectant(c5, c5, 2), 4
    ).scalar()
    return InvariantVector(xi0, xi1, xi2, xi3, xi4)


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def signature(f):
    """Number of real roots of a squarefree degree-7 polynomial (Sturm)."""
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise DomainError("signature requires a squarefree polynomial")
    chain = [
        [Fraction(c) for c in f.coeffs],
        [Fraction(c) for c in f.derivative().coeffs],
    ]
    while len(chain[-1]) > 1:
        rem = _frac_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    at_minus = []
    at_plus = []
    for poly in chain:
        lead = poly[-1]
        deg = len(poly) - 1
        at_plus.append(1 if lead > 0 else -1 if lead < 0 else 0)
        sm = lead if deg % 2 == 0 else -lead
        at_minus.append(1 if sm > 0 else -1 if sm < 0 else 0)
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def _frac_rem(a, b):
    rem = list(a)
    db = len(b) - 1
    while len(rem) - 1 >= db:
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - 1 - db
        q = rem[-1] / b[-1]
        for j in range(len(b)):
            rem[shift + j] -= q * b[j]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem
