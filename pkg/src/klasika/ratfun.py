"""Partial fractions over Q, symbolic integration of rational functions,
rational parametrization of conics, and the ellipse's area and perimeter.

The factorization step only uses what is exact here: rational roots are
peeled off with multiplicity, and whatever remains is split into squarefree
pieces; a piece is accepted only if it is a monic quadratic with negative
discriminant.  Anything else (an irreducible-over-these-methods residual of
degree >= 3, a quadratic with irrational real roots, or a repeated quadratic
factor at the decomposition stage) fails cleanly with an error naming the
offender, never with a silently wrong answer.

Antiderivatives come out term by term:

    A/(x-r)        ->  A*ln|x-r|
    A/(x-r)^k      ->  -A/((k-1)*(x-r)^(k-1))          (k >= 2)
    (Bx+C)/(x^2+px+q)
                   ->  (B/2)*ln(x^2+px+q)
                       + ((C-Bp/2)/s)*arctan((x+p/2)/s),  s = sqrt(q-p^2/4)

and the canonical text rendering orders terms deterministically: polynomial
part, then logs of linear factors by root, then negative powers, then logs
of quadratics, then arctangents, with a trailing "+ K".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exact import Polynomial, RationalLike, _as_fraction, poly_gcd, rational_roots
from .forms import solve_linear_system

__all__ = [
    "UnsupportedFactorizationError",
    "RealFactorization",
    "PartialFractions",
    "PolyTerm",
    "LogAbs",
    "PowerTerm",
    "LogQuadratic",
    "ArctanTerm",
    "SymbolicAntiderivative",
    "ConicParam",
    "factor_real",
    "partial_fractions",
    "integrate_rational",
    "parametrize_conic",
    "ellipse_area",
    "ellipse_perimeter",
    "adaptive_simpson",
]


class UnsupportedFactorizationError(ValueError):
    """The denominator does not factor into rational linear and irreducible
    quadratic pieces by the methods used here."""

    def __init__(self, message: str, residual: Polynomial | None = None):
        super().__init__(message)
        self.residual = residual


# -- real factorization ------------------------------------------------------------


@dataclass(frozen=True)
class RealFactorization:
    """constant * prod (x - root)^k * prod (x^2 + p*x + q)^k, all exact."""

    constant: Fraction
    linear_factors: tuple[tuple[Fraction, int], ...]
    quadratic_factors: tuple[tuple[Fraction, Fraction, int], ...]

    def expand(self) -> Polynomial:
        out = Polynomial([self.constant])
        for root, mult in self.linear_factors:
            out = out * Polynomial([-root, 1]) ** mult
        for p, q, mult in self.quadratic_factors:
            out = out * Polynomial([q, p, 1]) ** mult
        return out


def _squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm over Q: f = prod A_i^i with the A_i squarefree, monic."""
    parts: list[tuple[Polynomial, int]] = []
    g = poly_gcd(f, f.derivative()) if f.degree >= 1 else Polynomial([1])
    w = f.monic() // g
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, g)
        factor = w // y
        if factor.degree >= 1:
            parts.append((factor.monic(), i))
        w = y
        g = g // y
        i += 1
    return parts


def factor_real(q: Polynomial) -> RealFactorization:
    """Factor q over Q into linear and irreducible quadratic pieces.

    Raises UnsupportedFactorizationError when a residual of degree >= 3
    survives, or when a quadratic piece has irrational real roots.
    """
    if q.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    constant = q.leading_coefficient
    if q.degree == 0:
        return RealFactorization(constant, (), ())
    roots = rational_roots(q)
    linear: list[tuple[Fraction, int]] = []
    residual = q.monic()
    for root in sorted(set(roots)):
        mult = roots.count(root)
        linear.append((root, mult))
        residual = residual // (Polynomial([-root, 1]) ** mult)
    quadratics: list[tuple[Fraction, Fraction, int]] = []
    if residual.degree >= 1:
        for piece, mult in _squarefree_decomposition(residual):
            if piece.degree == 2:
                p, q0 = piece[1], piece[0]
                if p * p - 4 * q0 < 0:
                    quadratics.append((p, q0, mult))
                    continue
                raise UnsupportedFactorizationError(
                    f"residual quadratic {piece} has irrational real roots", piece
                )
            raise UnsupportedFactorizationError(
                f"residual factor {piece} of degree {piece.degree} has no rational root "
                "and is not an irreducible quadratic",
                piece,
            )
    quadratics.sort(key=lambda t: (t[0], t[1]))
    return RealFactorization(constant, tuple(linear), tuple(quadratics))


# -- partial fractions ---------------------------------------------------------------


@dataclass(frozen=True)
class PartialFractions:
    """polynomial_part + sum A/(x-r)^k + sum (B*x+C)/(x^2+p*x+q)."""

    polynomial_part: Polynomial
    linear_terms: tuple[tuple[Fraction, Fraction, int], ...]  # (A, root, power)
    quadratic_terms: tuple[tuple[Fraction, Fraction, Fraction, Fraction], ...]  # (B, C, p, q)

    def recombine(self) -> tuple[Polynomial, Polynomial]:
        """Exact numerator and denominator of the recombined expression."""
        max_linear: dict[Fraction, int] = {}
        for _, root, power in self.linear_terms:
            max_linear[root] = max(max_linear.get(root, 0), power)
        den = Polynomial([1])
        for root, power in sorted(max_linear.items()):
            den = den * Polynomial([-root, 1]) ** power
        for _, _, p, q in self.quadratic_terms:
            den = den * Polynomial([q, p, 1])
        num = self.polynomial_part * den
        for a, root, power in self.linear_terms:
            num = num + a * (den // Polynomial([-root, 1]) ** power)
        for b, c, p, q in self.quadratic_terms:
            num = num + Polynomial([c, b]) * (den // Polynomial([q, p, 1]))
        return num, den


def partial_fractions(p: Polynomial, q: Polynomial) -> PartialFractions:
    """Exact decomposition of p/q by coefficient matching over Q."""
    if q.is_zero:
        raise ZeroDivisionError("denominator is the zero polynomial")
    fact = factor_real(q)
    for _, _, mult in fact.quadratic_factors:
        if mult >= 2:
            raise UnsupportedFactorizationError(
                "repeated quadratic factors are not supported by this decomposition"
            )
    poly_part, rem = divmod(p, q)
    if rem.is_zero:
        return PartialFractions(poly_part, (), ())
    # make the denominator the monic product of the factors
    rem = rem * (1 / fact.constant)
    monic_q = q.monic()

    unknown_cols: list[Polynomial] = []
    labels: list[tuple] = []
    for root, mult in fact.linear_factors:
        for power in range(1, mult + 1):
            cofactor = monic_q // (Polynomial([-root, 1]) ** power)
            unknown_cols.append(cofactor)
            labels.append(("lin", root, power))
    for pp, qq, _ in fact.quadratic_factors:
        cofactor = monic_q // Polynomial([qq, pp, 1])
        unknown_cols.append(cofactor * Polynomial([0, 1]))
        labels.append(("quadB", pp, qq))
        unknown_cols.append(cofactor)
        labels.append(("quadC", pp, qq))

    size = monic_q.degree
    assert len(unknown_cols) == size
    matrix = [[col[i] for col in unknown_cols] for i in range(size)]
    rhs = [rem[i] for i in range(size)]
    solution = solve_linear_system(matrix, rhs)

    linear_terms = []
    quad_parts: dict[tuple[Fraction, Fraction], dict[str, Fraction]] = {}
    for value, label in zip(solution, labels):
        if label[0] == "lin":
            _, root, power = label
            if value != 0:
                linear_terms.append((value, root, power))
        else:
            kind, pp, qq = label
            quad_parts.setdefault((pp, qq), {})[kind] = value
    quadratic_terms = []
    for (pp, qq), parts in sorted(quad_parts.items()):
        quadratic_terms.append(
            (parts.get("quadB", Fraction(0)), parts.get("quadC", Fraction(0)), pp, qq)
        )
    return PartialFractions(poly_part, tuple(linear_terms), tuple(quadratic_terms))


# -- symbolic antiderivatives ----------------------------------------------------------


@dataclass(frozen=True)
class PolyTerm:
    poly: Polynomial

    def eval(self, x: float) -> float:
        return self.poly(x)


@dataclass(frozen=True)
class LogAbs:
    coeff: Fraction
    root: Fraction

    def eval(self, x: float) -> float:
        return float(self.coeff) * math.log(abs(x - float(self.root)))


@dataclass(frozen=True)
class PowerTerm:
    coeff: Fraction
    root: Fraction
    exponent: int  # always <= -1

    def eval(self, x: float) -> float:
        return float(self.coeff) * (x - float(self.root)) ** self.exponent


@dataclass(frozen=True)
class LogQuadratic:
    coeff: Fraction
    p: Fraction
    q: Fraction

    def eval(self, x: float) -> float:
        return float(self.coeff) * math.log(x * x + float(self.p) * x + float(self.q))


@dataclass(frozen=True)
class ArctanTerm:
    """(coeff/s) * arctan((x + p/2)/s) with s = sqrt(q - p^2/4) > 0."""

    coeff: Fraction
    p: Fraction
    q: Fraction

    @property
    def scale_squared(self) -> Fraction:
        return self.q - self.p * self.p / 4

    @property
    def shift(self) -> Fraction:
        return self.p / 2

    def eval(self, x: float) -> float:
        s = math.sqrt(float(self.scale_squared))
        return float(self.coeff) / s * math.atan((x + float(self.shift)) / s)


Term = Union[PolyTerm, LogAbs, PowerTerm, LogQuadratic, ArctanTerm]


def _fmt_fraction(value: Fraction) -> str:
    return str(value)


def _fmt_linear(root: Fraction) -> str:
    if root == 0:
        return "x"
    if root > 0:
        return f"x-{_fmt_fraction(root)}"
    return f"x+{_fmt_fraction(-root)}"


def _fmt_quadratic(p: Fraction, q: Fraction) -> str:
    out = "x^2"
    if p != 0:
        xterm = "x" if abs(p) == 1 else f"{_fmt_fraction(abs(p))}*x"
        out += ("+" if p > 0 else "-") + xterm
    if q != 0:
        out += ("+" if q > 0 else "-") + _fmt_fraction(abs(q))
    return out


def _fmt_poly(poly: Polynomial) -> str:
    pieces = []
    for i in range(len(poly.coeffs) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = _fmt_fraction(mag)
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            body = xpart if mag == 1 else f"{_fmt_fraction(mag)}*{xpart}"
        pieces.append((c > 0, body))
    return pieces


def _is_square(fr: Fraction) -> Fraction | None:
    if fr < 0:
        return None
    ns, ds = math.isqrt(fr.numerator), math.isqrt(fr.denominator)
    if ns * ns == fr.numerator and ds * ds == fr.denominator:
        return Fraction(ns, ds)
    return None


@dataclass(frozen=True)
class SymbolicAntiderivative:
    terms: tuple[Term, ...]

    def eval(self, x: float) -> float:
        return sum(term.eval(x) for term in self.terms)

    def render(self) -> str:
        """Canonical text, e.g. ``ln|x| + 1/2*ln(x^2+4) - 1/2*arctan(x/2) + K``."""
        pieces: list[tuple[bool, str]] = []
        for term in self.terms:
            if isinstance(term, PolyTerm):
                pieces.extend(_fmt_poly(term.poly))
        for term in sorted(
            (t for t in self.terms if isinstance(t, LogAbs)), key=lambda t: t.root
        ):
            pieces.append(self._coeff_body(term.coeff, f"ln|{_fmt_linear(term.root)}|"))
        for term in sorted(
            (t for t in self.terms if isinstance(t, PowerTerm)),
            key=lambda t: (t.root, -t.exponent),
        ):
            k = -term.exponent
            denom = f"({_fmt_linear(term.root)})" if k == 1 else f"({_fmt_linear(term.root)})^{k}"
            mag = abs(term.coeff)
            pieces.append((term.coeff > 0, f"{_fmt_fraction(mag)}/{denom}"))
        for term in sorted(
            (t for t in self.terms if isinstance(t, LogQuadratic)), key=lambda t: (t.p, t.q)
        ):
            pieces.append(self._coeff_body(term.coeff, f"ln({_fmt_quadratic(term.p, term.q)})"))
        for term in sorted(
            (t for t in self.terms if isinstance(t, ArctanTerm)), key=lambda t: (t.p, t.q)
        ):
            pieces.append(self._arctan_piece(term))
        if not pieces:
            return "K"
        first_sign, first_body = pieces[0]
        out = first_body if first_sign else f"-{first_body}"
        for sign, body in pieces[1:]:
            out += f" + {body}" if sign else f" - {body}"
        return out + " + K"

    @staticmethod
    def _coeff_body(coeff: Fraction, body: str) -> tuple[bool, str]:
        mag = abs(coeff)
        if mag == 1:
            return coeff > 0, body
        return coeff > 0, f"{_fmt_fraction(mag)}*{body}"

    @staticmethod
    def _arctan_piece(term: ArctanTerm) -> tuple[bool, str]:
        s2 = term.scale_squared
        shift = term.shift
        s = _is_square(s2)
        if s is not None:
            total = term.coeff / s
            if shift == 0:
                arg = "x" if s == 1 else f"x/{_fmt_fraction(s)}"
            else:
                inner = _fmt_linear(-shift)  # renders x + shift
                arg = f"({inner})" if s == 1 else f"({inner})/{_fmt_fraction(s)}"
            return SymbolicAntiderivative._coeff_body(total, f"arctan({arg})")
        root_txt = f"sqrt({_fmt_fraction(s2)})"
        inner = "x" if shift == 0 else _fmt_linear(-shift)
        arg = f"({inner})/{root_txt}"
        mag = abs(term.coeff)
        coeff_txt = f"{_fmt_fraction(mag)}/{root_txt}"
        return term.coeff > 0, f"{coeff_txt}*arctan({arg})"


def integrate_rational(p: Polynomial, q: Polynomial) -> SymbolicAntiderivative:
    """Antiderivative of p/q, term by term from the partial fractions."""
    pf = partial_fractions(p, q)
    terms: list[Term] = []
    if not pf.polynomial_part.is_zero:
        integrated = Polynomial(
            [Fraction(0)] + [c / (i + 1) for i, c in enumerate(pf.polynomial_part.coeffs)]
        )
        terms.append(PolyTerm(integrated))
    for a, root, power in pf.linear_terms:
        if power == 1:
            terms.append(LogAbs(a, root))
        else:
            terms.append(PowerTerm(-a / (power - 1), root, -(power - 1)))
    for b, c, pp, qq in pf.quadratic_terms:
        if b != 0:
            terms.append(LogQuadratic(b / 2, pp, qq))
        resid = c - b * pp / 2
        if resid != 0:
            terms.append(ArctanTerm(resid, pp, qq))
    return SymbolicAntiderivative(tuple(terms))


# -- conic parametrization ---------------------------------------------------------


_CONIC_KINDS = ("circle", "ellipse", "hyperbola", "parabola")


@dataclass(frozen=True)
class ConicParam:
    """Rational parametrization data for one conic in standard position.

    circle/ellipse:  x = a(1-t^2)/(1+t^2),  y = 2bt/(1+t^2)
    hyperbola:       x = a(1+t^2)/(1-t^2),  y = 2bt/(1-t^2)   (poles t = +-1)
    parabola:        x = a t^2,             y = 2 a t          (y^2 = 4ax)
    """

    kind: str
    a: float
    b: float

    def __post_init__(self):
        if self.kind not in _CONIC_KINDS:
            raise ValueError(f"unknown conic kind {self.kind!r}")
        if not (self.a > 0 and self.b > 0):
            raise ValueError("semi-axes must be positive")
        if self.kind == "circle" and self.a != self.b:
            raise ValueError("a circle needs equal semi-axes")

    def point(self, t: float) -> tuple[float, float]:
        if self.kind in ("circle", "ellipse"):
            den = 1.0 + t * t
            return self.a * (1.0 - t * t) / den, 2.0 * self.b * t / den
        if self.kind == "hyperbola":
            den = 1.0 - t * t
            if den == 0.0:
                raise ValueError(f"t = {t} is a pole of the parametrization (t^2 = 1)")
            return self.a * (1.0 + t * t) / den, 2.0 * self.b * t / den
        return self.a * t * t, 2.0 * self.a * t

    def implicit_residual(self, x: float, y: float) -> float:
        """Relative residual of the conic's implicit equation at (x, y)."""
        if self.kind in ("circle", "ellipse"):
            t1, t2 = (x / self.a) ** 2, (y / self.b) ** 2
            return abs(t1 + t2 - 1.0) / (1.0 + t1 + t2)
        if self.kind == "hyperbola":
            t1, t2 = (x / self.a) ** 2, (y / self.b) ** 2
            return abs(t1 - t2 - 1.0) / (1.0 + t1 + t2)
        t1, t2 = y * y, 4.0 * self.a * x
        return abs(t1 - t2) / (1.0 + abs(t1) + abs(t2))


def parametrize_conic(conic: ConicParam, t: float) -> tuple[float, float]:
    return conic.point(t)


# -- ellipse area and perimeter ------------------------------------------------------


def ellipse_area(a: float, b: float) -> float:
    """pi*a*b, the area enclosed by x^2/a^2 + y^2/b^2 = 1."""
    if not (a > 0 and b > 0):
        raise ValueError("semi-axes must be positive")
    return math.pi * a * b


def adaptive_simpson(fn, lo: float, hi: float, tol: float, max_depth: int = 60) -> float:
    """Classic adaptive Simpson with the 1/15 error estimate."""

    def simpson(x0, x2, f0, f1, f2):
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def recurse(x0, x2, f0, fm, f2, whole, eps, depth):
        xm = 0.5 * (x0 + x2)
        lm, rm = 0.5 * (x0 + xm), 0.5 * (xm + x2)
        flm, frm = fn(lm), fn(rm)
        left = simpson(x0, xm, f0, flm, fm)
        right = simpson(xm, x2, fm, frm, f2)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        return recurse(x0, xm, f0, flm, fm, left, eps / 2.0, depth + 1) + recurse(
            xm, x2, fm, frm, f2, right, eps / 2.0, depth + 1
        )

    mid = 0.5 * (lo + hi)
    f_lo, f_mid, f_hi = fn(lo), fn(mid), fn(hi)
    whole = simpson(lo, hi, f_lo, f_mid, f_hi)
    return recurse(lo, hi, f_lo, f_mid, f_hi, whole, tol, 0)


def ellipse_perimeter(a: float, b: float, tol: float = 1e-12) -> float:
    """4a * integral_0^(pi/2) sqrt(1 - e^2 sin^2 t) dt with e^2 = (a^2-b^2)/a^2.

    The integrand is smooth on the whole interval, so adaptive Simpson at the
    requested tolerance (absolute, on the unit integral) is enough; the
    circle case degenerates to a constant integrand and returns 2*pi*a.
    """
    if not (a >= b > 0):
        raise ValueError("require a >= b > 0 (swap the axes first if needed)")
    e2 = (a * a - b * b) / (a * a)

    def integrand(t: float) -> float:
        s = math.sin(t)
        return math.sqrt(1.0 - e2 * s * s)

    return 4.0 * a * adaptive_simpson(integrand, 0.0, math.pi / 2.0, tol)
