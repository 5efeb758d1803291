"""Arbitrary-precision complex roots of degree-7 integer polynomials.

Aberth-Ehrlich simultaneous iteration on mpmath complex numbers with
deterministic initial placement, residual-based error bounds and a
Vieta-based verification hook.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .intpoly import DomainError, poly_gcd


class ConvergenceError(RuntimeError):
    """Root iteration failed to converge at the requested precision."""


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    precision: int
    error_bounds: tuple


def _cauchy_radius(f):
    lc = abs(f.lc)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lc if f.degree > 0 else 1


def find_roots(f, precision_digits):
    """All complex roots of a squarefree degree-7 polynomial.

    Residuals are pushed below ~10^-(precision_digits + guard); on stall the
    precision is escalated twice before giving up.
    """
    if f.degree != 7:
        raise DomainError(f"expected degree 7, got {f.degree}")
    if precision_digits < 30:
        raise DomainError("precision must be at least 30 digits")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise DomainError("root finding requires a squarefree polynomial")
    for attempt in range(3):
        dps = precision_digits * (2 ** attempt)
        try:
            roots, bounds = _aberth(f, dps)
        except ConvergenceError:
            continue
        return RootSet(tuple(roots), dps, tuple(bounds))
    raise ConvergenceError(
        f"no convergence for {f!r} up to {precision_digits * 4} digits"
    )


def _aberth(f, dps, max_sweeps=400):
    n = f.degree
    guard = 12
    coeffs = [mp.mpf(c) for c in f.coeffs]
    dcoeffs = [mp.mpf(c) for c in f.derivative().coeffs]

    def evaluate(cs, z):
        acc = mp.mpc(0)
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    with mp.workdps(dps + guard):
        radius = mp.mpf(_cauchy_radius(f))
        # fixed rotation offset keeps starting points away from real-axis
        # symmetries and makes runs reproducible
        z = [
            radius * mp.expjpi(mp.mpf(2 * k) / n + mp.mpf("0.3571"))
            for k in range(n)
        ]
        target = mp.mpf(10) ** (-(dps + guard - 4))
        scale = max(mp.mpf(abs(c)) for c in coeffs)
        for _ in range(max_sweeps):
            converged = True
            for i in range(n):
                fz = evaluate(coeffs, z[i])
                dfz = evaluate(dcoeffs, z[i])
                if dfz == 0:
                    z[i] += mp.mpf("1e-3") * radius
                    converged = False
                    continue
                newton = fz / dfz
                rep = mp.mpc(0)
                for j in range(n):
                    if j != i:
                        rep += 1 / (z[i] - z[j])
                denom = 1 - newton * rep
                step = newton / denom if denom != 0 else newton
                z[i] -= step
                if abs(step) > target * max(1, abs(z[i])):
                    converged = False
            if converged:
                break
        else:
            raise ConvergenceError("sweep budget exhausted")
        residuals = [abs(evaluate(coeffs, zi)) for zi in z]
        if max(residuals) > scale * mp.mpf(10) ** (-(dps - 2)):
            raise ConvergenceError("residuals too large")
        bounds = []
        for i in range(n):
            dfz = abs(evaluate(dcoeffs, z[i]))
            bounds.append(n * residuals[i] / dfz if dfz else mp.inf)
        order = sorted(range(n), key=lambda i: (mp.re(z[i]), mp.im(z[i])))
        return [z[i] for i in order], [bounds[i] for i in order]


def vieta_residual(rootset, f):
    """Largest relative mismatch between elementary symmetric functions of
    the roots and the (sign-adjusted) coefficient ratios."""
    n = f.degree
    with mp.workdps(rootset.precision + 10):
        es = [mp.mpc(1)]
        for r in rootset.roots:
            es = [es[0]] + [es[k] + r * es[k - 1] for k in range(1, len(es))] + [r * es[-1]]
        worst = mp.mpf(0)
        for k in range(1, n + 1):
            expected = mp.mpf((-1) ** k) * mp.mpf(f[n - k]) / mp.mpf(f.lc)
            got = es[k]
            denom = max(mp.mpf(1), abs(expected))
            worst = max(worst, abs(got - expected) / denom)
        return worst
