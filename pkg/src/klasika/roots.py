"""Polynomial depression and closed-form quadratic/cubic solution.

Depression is exact: substituting x = y - a_(n-1)/n into the monic form of
the input kills the second-highest term, and both the shift and the new
coefficients stay rational.  Root extraction after that is numeric
(double-precision complex), with the branch bookkeeping below.

Cubic branch pairing: with the depressed cubic y^3 + a*y + b, the two cube
radicands are the roots of Z^2 + b*Z - a^3/27.  We take u as the principal
cube root of the larger-magnitude radicand evaluated cancellation-free, then
force v = -a/(3u) rather than taking an independent cube root, so the
constraint u*v = -a/3 holds to machine precision and u + v is genuinely a
root; when a = 0 the degenerate pairing u = 0, v = cbrt(-b) is used instead.
Different admissible cube-root pairings would only permute the root labels.

When the exact discriminant of the depressed cubic is positive all three
roots are real, so imaginary parts below 1e-9 are dropped and each root gets
one Newton step on the real axis to recover full accuracy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .disc import discriminant_resultant
from .exact import Polynomial, _coeff_float

__all__ = [
    "DepressedPolynomial",
    "CubicRoots",
    "depress",
    "solve_quadratic",
    "solve_cubic_cardano",
    "roots_of_unity",
    "residual_tolerance",
]

_OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)  # primitive cube root of unity
_OMEGA2 = complex(-0.5, -math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class DepressedPolynomial:
    """Monic polynomial with zero second-highest coefficient, plus the shift.

    `poly(x + shift)` recovers the monic form of the original input, so a
    root y of `poly` maps back to the root y - shift of the original.
    """

    poly: Polynomial
    shift: Fraction


@dataclass(frozen=True)
class CubicRoots:
    roots: tuple[complex, complex, complex]
    residuals: tuple[float, float, float]


def residual_tolerance(f: Polynomial) -> float:
    """Scale-aware residual bound used by the cubic solver: 1e-8*(1+||f||_1)."""
    return 1e-8 * (1.0 + f.norm_1())


def depress(f: Polynomial) -> DepressedPolynomial:
    """Shift out the second-highest term: exact over Q."""
    n = f.degree
    if f.is_zero or n < 2:
        raise ValueError("depression requires degree >= 2")
    g = f.monic()
    shift = g[n - 1] / n
    dep = g.taylor_shift(-shift)
    assert dep[n - 1] == 0
    return DepressedPolynomial(dep, shift)


def _real_cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _principal_cbrt(z: complex) -> complex:
    r, phi = cmath.polar(z)
    return cmath.rect(r ** (1.0 / 3.0), phi / 3.0)


def _sort_key(z: complex):
    return (z.real, z.imag)


def solve_quadratic(f: Polynomial) -> tuple[complex, complex]:
    """Both roots of a degree-2 polynomial, conjugate pair when Delta < 0."""
    if f.degree != 2:
        raise ValueError("solve_quadratic requires degree exactly 2")
    a2, a1, a0 = f[2], f[1], f[0]
    delta = a1 * a1 - 4 * a2 * a0  # exact
    af, bf, cf = _coeff_float(a2), _coeff_float(a1), _coeff_float(a0)
    if delta >= 0:
        sq = math.sqrt(_coeff_float(delta))
        if bf >= 0:
            qv = -(bf + sq) / 2.0
        else:
            qv = -(bf - sq) / 2.0
        r1 = qv / af
        r2 = cf / qv if qv != 0.0 else -bf / (2.0 * af)
        roots = sorted((complex(r1, 0.0), complex(r2, 0.0)), key=_sort_key)
    else:
        re = -bf / (2.0 * af)
        im = math.sqrt(_coeff_float(-delta)) / (2.0 * af)
        im = abs(im)
        roots = [complex(re, -im), complex(re, im)]
    return roots[0], roots[1]


def solve_cubic_cardano(f: Polynomial) -> CubicRoots:
    """All three roots of a degree-3 polynomial by depression plus radicals."""
    if f.degree != 3:
        raise ValueError("solve_cubic_cardano requires degree exactly 3")
    dep = depress(f)
    a, b = dep.poly[1], dep.poly[0]  # y^3 + a*y + b
    radicand = b * b / 4 + a * a * a / 27  # exact; the depressed discriminant is -108 times this

    if a == 0:
        u = 0.0 + 0.0j
        v = complex(_real_cbrt(-_coeff_float(b)), 0.0)
    elif radicand > 0:
        sq = math.sqrt(_coeff_float(radicand))
        bf = _coeff_float(b)
        if bf > 0:
            # -b/2 + sq would cancel; rationalize through the exact product of the radicands
            u3 = _coeff_float(a) ** 3 / 27.0 / (bf / 2.0 + sq)
        else:
            u3 = -bf / 2.0 + sq
        u = complex(_real_cbrt(u3), 0.0)
        v = -_coeff_float(a) / (3.0 * u)
    elif radicand == 0:
        u = complex(_real_cbrt(-_coeff_float(b) / 2.0), 0.0)
        v = -_coeff_float(a) / (3.0 * u)
    else:
        u3 = complex(-_coeff_float(b) / 2.0, math.sqrt(_coeff_float(-radicand)))
        u = _principal_cbrt(u3)
        v = -_coeff_float(a) / (3.0 * u)

    ys = [u + v, _OMEGA * u + _OMEGA2 * v, _OMEGA2 * u + _OMEGA * v]

    if discriminant_resultant(dep.poly) > 0:
        # all roots real: drop imaginary noise, then one Newton step each
        dp = dep.poly.derivative()
        fixed = []
        for y in ys:
            yr = y.real if abs(y.imag) < 1e-9 else y
            if isinstance(yr, float):
                slope = dp(yr)
                if slope != 0.0:
                    yr = yr - dep.poly(yr) / slope
                yr = complex(yr, 0.0)
            fixed.append(yr)
        ys = fixed

    shift = _coeff_float(dep.shift)
    roots = [y - shift for y in ys]
    tol = residual_tolerance(f)
    roots = [_polish(f, r, tol) for r in roots]
    residuals = tuple(abs(f(r)) for r in roots)
    return CubicRoots(tuple(roots), residuals)


def _polish(f: Polynomial, root: complex, tol: float) -> complex:
    """A couple of complex Newton steps, only if the residual asks for it."""
    if abs(f(root)) <= tol:
        return root
    df = f.derivative()
    for _ in range(3):
        slope = df(root)
        if slope == 0:
            break
        root = root - f(root) / slope
        if abs(f(root)) <= tol:
            break
    return root


def roots_of_unity(n: int) -> list[complex]:
    """The n distinct points (cos 2*pi*k/n, sin 2*pi*k/n); the first is exactly 1."""
    if n < 1:
        raise ValueError("roots_of_unity requires n >= 1")
    out = [complex(1.0, 0.0)]
    for k in range(1, n):
        theta = 2.0 * math.pi * k / n
        out.append(complex(math.cos(theta), math.sin(theta)))
    return out
