"""Polynomial roots and certified growth bounds.

Two routes that must agree: Durand-Kerner simultaneous iteration in
double precision supplies the global root picture (all roots, moduli,
the gap between the two smallest), while exact rational bisection on a
sign-change bracket certifies the digits of the one root that matters.
The certificate for "unique smallest-modulus root" combines both.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .series import IntPolynomial, RationalFunction

__all__ = [
    "BracketError",
    "CertificateError",
    "RootConvergenceError",
    "RootEstimate",
    "all_roots",
    "bracket_smallest_positive_root",
    "certified_smallest_root",
    "growth_bound",
    "is_square_free",
    "refine_real_root",
]


class RootConvergenceError(RuntimeError):
    """Durand-Kerner iteration failed to settle."""


class BracketError(RuntimeError):
    """No sign change found on the scan grid."""


class CertificateError(RuntimeError):
    """The smallest root could not be certified unique and real."""


@dataclass(frozen=True)
class RootEstimate:
    """A real root pinned to [value - radius, value + radius].

    unique_smallest is set only when the float root picture shows a
    modulus gap beyond 1 + 10*radius/value between the smallest root and
    every other root.
    """

    value: float
    radius: float
    unique_smallest: bool = False
    modulus_gap: float | None = None

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.unique_smallest:
            if self.modulus_gap is None or not (
                self.modulus_gap > 1 + 10 * self.radius / self.value
            ):
                raise ValueError("modulus gap does not support unique_smallest")


def all_roots(
    p: IntPolynomial, *, tol: float = 1e-13, max_iter: int = 1000
) -> list[complex]:
    """All complex roots of p by Durand-Kerner iteration.

    Roots are returned sorted by modulus.  Each must pass a residual test
    scaled by the coefficient sizes, and for the (real) inputs used here
    the root multiset must be closed under conjugation; a failure of
    either raises instead of returning bad data.
    """
    if p.degree < 1:
        raise ValueError("polynomial must have degree at least 1")
    lead = p.coeffs[-1]
    monic = [c / lead for c in p.coeffs]
    deg = p.degree
    if deg == 1:
        return [complex(-monic[0])]

    def value(z: complex) -> complex:
        out = 0j
        for c in reversed(monic):
            out = out * z + c
        return out

    radius = 1.0 + max(abs(c) for c in monic[:-1])
    seed = cmath.exp(0.4j)  # irrational angle, breaks symmetry
    roots = [
        radius ** ((k + 1) / deg) * seed * cmath.exp(2j * cmath.pi * k / deg)
        for k in range(deg)
    ]
    for _ in range(max_iter):
        shift = 0.0
        for k in range(deg):
            zk = roots[k]
            denom = 1.0 + 0j
            for j in range(deg):
                if j != k:
                    denom *= zk - roots[j]
            if denom == 0:
                roots[k] = zk + 1e-8 * (1 + 1j)
                shift = float("inf")
                continue
            delta = value(zk) / denom
            roots[k] = zk - delta
            shift = max(shift, abs(delta))
        if shift <= tol * max(1.0, max(abs(z) for z in roots)):
            break
    else:
        raise RootConvergenceError(f"no convergence after {max_iter} iterations: {roots}")

    for z in roots:
        scale = sum(abs(c) * max(1.0, abs(z)) ** i for i, c in enumerate(monic))
        if abs(value(z)) > 1e-8 * scale:
            raise RootConvergenceError(f"residual too large at {z}: {abs(value(z))}")
    unmatched = list(roots)
    for z in roots:
        # conjugation closure, with tolerance loose enough for clusters
        best = min(unmatched, key=lambda u: abs(u - z.conjugate()))
        if abs(best - z.conjugate()) > 1e-6 * max(1.0, abs(z)):
            raise RootConvergenceError(f"roots not closed under conjugation near {z}")
        unmatched.remove(best)
    return sorted(roots, key=lambda z: (abs(z), z.real, z.imag))


def refine_real_root(
    p: IntPolynomial, lo: Fraction, hi: Fraction, tol: float = 1e-11
) -> RootEstimate:
    """Bisect a sign-change bracket down to width 2*tol, exactly.

    Signs are evaluated in rational arithmetic, so the returned interval
    is a proof, not an estimate.  Endpoints with equal signs are refused.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if not tol > 0:
        raise ValueError("tol must be positive")
    tol_frac = Fraction(tol)
    f_lo = p.evaluate(lo)
    f_hi = p.evaluate(hi)
    if f_lo == 0:
        hi = lo
    elif f_hi == 0:
        lo = hi
    elif (f_lo > 0) == (f_hi > 0):
        raise ValueError(
            f"no sign change on [{lo}, {hi}]: p(lo)={float(f_lo):g}, p(hi)={float(f_hi):g}"
        )
    else:
        while hi - lo > 2 * tol_frac:
            mid = (lo + hi) / 2
            f_mid = p.evaluate(mid)
            if f_mid == 0:
                lo = hi = mid
                break
            if (f_mid > 0) == (f_lo > 0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
    mid = (lo + hi) / 2
    # half-width plus a float-rounding ulp so the interval stays honest
    radius = float((hi - lo) / 2) + abs(float(mid)) * 2.3e-16 + 5e-324
    return RootEstimate(value=float(mid), radius=radius)


def bracket_smallest_positive_root(
    p: IntPolynomial, *, grid: int = 64
) -> tuple[Fraction, Fraction]:
    """First sign change of p on the grid k/grid, k = 1..grid-1.

    Raises BracketError when the scan sees none; the caller decides what
    a degenerate scan means, nothing is guessed here.
    """
    prev_x = Fraction(0)
    prev_sign = None
    for k in range(1, grid):
        x = Fraction(k, grid)
        v = p.evaluate(x)
        if v == 0:
            return x, x
        sign = v > 0
        if prev_sign is not None and sign != prev_sign:
            return prev_x, x
        prev_x, prev_sign = x, sign
    raise BracketError(f"no sign change of {p.coeffs} at k/{grid}, k=1..{grid - 1}")


def is_square_free(p: IntPolynomial) -> bool:
    """Exact check: gcd(p, p') is a constant."""
    return _fraction_gcd_degree(p, p.derivative()) == 0


def _fraction_gcd_degree(a: IntPolynomial, b: IntPolynomial) -> int:
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]

    def strip(v: list[Fraction]) -> list[Fraction]:
        while v and v[-1] == 0:
            v.pop()
        return v

    fa, fb = strip(fa), strip(fb)
    while fb:
        # remainder of fa / fb
        r = fa[:]
        while len(r) >= len(fb):
            factor = r[-1] / fb[-1]
            shift = len(r) - len(fb)
            for i, c in enumerate(fb):
                r[i + shift] -= factor * c
            strip(r)
            if not r:
                break
        fa, fb = fb, r
    return len(fa) - 1


def certified_smallest_root(p: IntPolynomial, *, tol: float = 1e-11) -> RootEstimate:
    """Certify and refine p's smallest-modulus root.

    Demands: p square-free (exact gcd test), float picture showing a
    real, positive smallest root with a clear modulus gap, and an exact
    sign-change bracket agreeing with the float root.  Any shortfall
    raises CertificateError with the conflicting data.
    """
    if not is_square_free(p):
        raise CertificateError(f"{p.coeffs} is not square-free")
    roots = all_roots(p)
    smallest = roots[0]
    if len(roots) == 1:
        gap = float("inf")
    else:
        gap = abs(roots[1]) / abs(smallest)
    if abs(smallest.imag) > 1e-8 * max(1.0, abs(smallest)) or smallest.real <= 0:
        raise CertificateError(
            f"smallest root {smallest} is not real positive "
            f"(two smallest moduli: {abs(roots[0]):.6g}, {abs(roots[1]):.6g})"
        )
    lo, hi = bracket_smallest_positive_root(p)
    if lo == hi:
        est = RootEstimate(value=float(lo), radius=abs(float(lo)) * 2.3e-16 + 5e-324)
    else:
        est = refine_real_root(p, lo, hi, tol)
    if abs(est.value - smallest.real) > 1e-6 * max(1.0, abs(smallest)):
        raise CertificateError(
            f"bisection found {est.value} but the smallest float root is {smallest}"
        )
    if not gap > 1 + 10 * est.radius / est.value:
        raise CertificateError(
            f"modulus gap {gap:.6g} too small for uniqueness "
            f"(two smallest moduli: {abs(roots[0]):.6g}, {abs(roots[1]):.6g})"
        )
    return RootEstimate(
        value=est.value,
        radius=est.radius,
        unique_smallest=True,
        modulus_gap=gap,
    )


def growth_bound(f: RationalFunction, *, tol: float = 1e-11) -> float:
    """The squared reciprocal of f's smallest denominator root.

    When f counts objects split over two words of total size 2n, its
    coefficient growth per unit of n is the square of the reciprocal
    root, which is what this returns; the root must pass the full
    uniqueness certificate first.
    """
    est = certified_smallest_root(f.den, tol=tol)
    return (1.0 / est.value) ** 2
