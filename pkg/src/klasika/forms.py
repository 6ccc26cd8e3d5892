"""Binary and ternary quadratic forms and their symmetric-matrix side.

Conventions worth pinning down once:

* A binary form a*x^2 + b*x*y + c*y^2 corresponds to the symmetric matrix
  [[a, b/2], [b/2, c]]; its discriminant b^2 - 4ac equals -4 times that
  matrix's determinant, exactly.
* A ternary form is stored with HALVED cross coefficients: the fields
  (a, b, c, d, e, f) mean a*x^2 + b*y^2 + c*z^2 + 2d*xy + 2e*xz + 2f*yz,
  matching the matrix [[a, d, e], [d, b, f], [e, f, c]].  Parsers that accept
  the cross coefficients as written in an equation must divide them by 2.
* A linear change of variables x -> C x acts on the matrix by congruence
  M -> C^t M C.  (Congruence, not similarity: the two coincide only for
  orthogonal C, even though older texts blur the names.)
* Inertia (counts of positive/negative/zero eigenvalues) is computed EXACTLY
  from the characteristic polynomial with Descartes' sign-variation rule,
  which is an exact count here because symmetric matrices have all-real
  spectra.  No classification ever hinges on a floating-point sign.
* `orthogonal_diagonalize` returns eigenvector COLUMNS in S with
  A = S diag(D) S^t; texts that write A = S^t D S are using the transposed
  convention, which for orthogonal S is the same factorization read backwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .disc import SquareMatrix, determinant
from .exact import Polynomial, RationalLike, _as_fraction, rational_roots
from .roots import solve_cubic_cardano, solve_quadratic

__all__ = [
    "BinaryForm",
    "TernaryForm",
    "SymMatrix",
    "Inertia",
    "ConicKind",
    "QuadricKind",
    "Diagonalization",
    "form_to_matrix",
    "matrix_to_form",
    "form_discriminant",
    "is_positive_definite",
    "transform_form",
    "char_poly",
    "inertia",
    "classify_conic",
    "classify_quadric",
    "quadric_degeneracy_note",
    "orthogonal_diagonalize",
    "diagonal_substitution",
    "solve_linear_system",
    "rational_nullspace",
]


@dataclass(frozen=True)
class BinaryForm:
    """a*x^2 + b*x*y + c*y^2 over Q."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(self.a + other.a, self.b + other.b, self.c + other.c)

    def scale(self, k: RationalLike) -> "BinaryForm":
        k = _as_fraction(k)
        return BinaryForm(k * self.a, k * self.b, k * self.c)


@dataclass(frozen=True)
class TernaryForm:
    """a*x^2 + b*y^2 + c*z^2 + 2d*xy + 2e*xz + 2f*yz over Q.

    Note the stored cross coefficients are the halved ones (the matrix
    entries), not the full coefficients written in front of xy, xz, yz.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "f"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    @classmethod
    def from_equation_coefficients(cls, a, b, c, dd, ee, ff) -> "TernaryForm":
        """Build from coefficients as written in an equation (full cross terms)."""
        return cls(a, b, c, _as_fraction(dd) / 2, _as_fraction(ee) / 2, _as_fraction(ff) / 2)

    def __call__(self, x, y, z):
        return (
            self.a * x * x
            + self.b * y * y
            + self.c * z * z
            + 2 * self.d * x * y
            + 2 * self.e * x * z
            + 2 * self.f * y * z
        )

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        return TernaryForm(
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
            self.d + other.d,
            self.e + other.e,
            self.f + other.f,
        )

    def scale(self, k: RationalLike) -> "TernaryForm":
        k = _as_fraction(k)
        return TernaryForm(k * self.a, k * self.b, k * self.c, k * self.d, k * self.e, k * self.f)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in (self.a, self.b, self.c, self.d, self.e, self.f))


class SymMatrix(SquareMatrix):
    """SquareMatrix that insists on exact symmetry."""

    def __init__(self, rows):
        super().__init__(rows)
        if not self.is_symmetric():
            raise ValueError("matrix is not symmetric")


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    def __iter__(self):
        return iter((self.n_plus, self.n_minus, self.n_zero))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)


class ConicKind(str, Enum):
    ELLIPSE = "Ellipse"
    HYPERBOLA = "Hyperbola"
    PARABOLA = "Parabola"
    CIRCLE = "Circle"
    DEGENERATE = "Degenerate"
    EMPTY = "Empty"


class QuadricKind(str, Enum):
    ELLIPSOID = "Ellipsoid"
    ELLIPTIC_PARABOLOID = "EllipticParaboloid"
    HYPERBOLOID_ONE_SHEET = "HyperboloidOneSheet"
    HYPERBOLOID_TWO_SHEETS = "HyperboloidTwoSheets"
    HYPERBOLIC_PARABOLOID = "HyperbolicParaboloid"
    PARABOLIC_CYLINDER = "ParabolicCylinder"
    OTHER = "Other"


@dataclass(frozen=True)
class Diagonalization:
    """S has orthonormal eigenvector columns, D the matching eigenvalues.

    residual is the max-norm of S diag(D) S^t minus the input.
    """

    S: tuple[tuple[float, ...], ...]
    D: tuple[float, ...]
    residual: float


# -- form <-> matrix -----------------------------------------------------------


def form_to_matrix(form: BinaryForm | TernaryForm) -> SymMatrix:
    if isinstance(form, BinaryForm):
        half = form.b / 2
        return SymMatrix([[form.a, half], [half, form.c]])
    if isinstance(form, TernaryForm):
        return SymMatrix(
            [
                [form.a, form.d, form.e],
                [form.d, form.b, form.f],
                [form.e, form.f, form.c],
            ]
        )
    raise TypeError(f"not a quadratic form: {form!r}")


def matrix_to_form(m: SquareMatrix) -> BinaryForm | TernaryForm:
    if not m.is_symmetric():
        raise ValueError("matrix is not symmetric")
    r = m.rows
    if m.n == 2:
        return BinaryForm(r[0][0], 2 * r[0][1], r[1][1])
    if m.n == 3:
        return TernaryForm(r[0][0], r[1][1], r[2][2], r[0][1], r[0][2], r[1][2])
    raise ValueError("only 2x2 and 3x3 matrices correspond to supported forms")


def form_discriminant(form: BinaryForm) -> Fraction:
    return form.b * form.b - 4 * form.a * form.c


def is_positive_definite(form: BinaryForm) -> bool:
    return form.a > 0 and form_discriminant(form) < 0


def transform_form(form: BinaryForm, c: Sequence[Sequence[RationalLike]]) -> BinaryForm:
    """The form whose matrix is C^t M C; equivalent to `form` when det C != 0."""
    cm = SquareMatrix(c)
    if cm.n != 2:
        raise ValueError("transformation matrix must be 2x2")
    m = cm.transpose() @ form_to_matrix(form) @ cm
    out = matrix_to_form(SymMatrix(m.rows))
    assert isinstance(out, BinaryForm)
    return out


# -- characteristic polynomial and exact inertia --------------------------------


def char_poly(m: SquareMatrix) -> Polynomial:
    """det(lambda*I - M), exactly, by the Faddeev-LeVerrier trace recursion."""
    n = m.n
    coeffs_desc = [Fraction(1)]
    mk = m
    for k in range(1, n + 1):
        tr = sum(mk.rows[i][i] for i in range(n))
        ck = -tr / k
        coeffs_desc.append(ck)
        if k < n:
            shifted = SquareMatrix(
                [
                    [mk.rows[i][j] + (ck if i == j else 0) for j in range(n)]
                    for i in range(n)
                ]
            )
            mk = m @ shifted
    return Polynomial(list(reversed(coeffs_desc)))


def _sign_variations(coeffs: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def inertia(m: SquareMatrix) -> Inertia:
    """Exact eigenvalue sign counts (positive, negative, zero).

    Descartes' rule applied to the characteristic polynomial counts the
    positive roots exactly because a symmetric matrix has only real
    eigenvalues; the zero count is the multiplicity of the root 0.
    """
    if not m.is_symmetric():
        raise ValueError("inertia requires a symmetric matrix")
    p = char_poly(m)
    cs = list(p.coeffs)
    n_zero = 0
    while cs[n_zero] == 0:
        n_zero += 1
    deflated = cs[n_zero:]
    n_plus = _sign_variations(deflated)
    n_minus = _sign_variations([c if i % 2 == 0 else -c for i, c in enumerate(deflated)])
    assert n_plus + n_minus + n_zero == m.n
    return Inertia(n_plus, n_minus, n_zero)


# -- conic classification --------------------------------------------------------


def classify_conic(
    a: RationalLike,
    b: RationalLike,
    c: RationalLike,
    d: RationalLike,
    e: RationalLike,
    lam: RationalLike,
) -> ConicKind:
    """Kind of the plane curve a*x^2 + b*xy + c*y^2 + d*x + e*y = lam.

    Everything is decided exactly over Q.  With Q the matrix of the
    quadratic part and B the bordered 3x3 matrix of the whole equation, the
    centered reduction lam1*X^2 + lam2*Y^2 = C has C = -det B / det Q, so no
    eigenvalue ever needs to be extracted numerically; the parabolic branch
    (det Q = 0) reduces along the exact rational kernel direction instead.
    """
    a, b, c, d, e, lam = (_as_fraction(v) for v in (a, b, c, d, e, lam))
    if a == 0 and b == 0 and c == 0:
        raise ValueError("not a conic: the quadratic part is zero")
    q = SymMatrix([[a, b / 2], [b / 2, c]])
    det_q = determinant(q)
    if det_q != 0:
        bordered = SquareMatrix(
            [
                [a, b / 2, d / 2],
                [b / 2, c, e / 2],
                [d / 2, e / 2, -lam],
            ]
        )
        const = -determinant(bordered) / det_q
        if det_q > 0:
            # definite quadratic part; its sign is the sign of the trace
            positive = a + c > 0
            if const == 0:
                return ConicKind.DEGENERATE  # a single point
            if (const > 0) == positive:
                if positive and a == c and b == 0:
                    return ConicKind.CIRCLE
                return ConicKind.ELLIPSE
            return ConicKind.EMPTY
        if const == 0:
            return ConicKind.DEGENERATE  # crossing line pair
        return ConicKind.HYPERBOLA

    # det Q = 0: exactly one zero eigenvalue (Q itself is nonzero)
    if a != 0 or b != 0:
        kernel = (-b / 2, a)
    else:
        kernel = (Fraction(1), Fraction(0))
    kappa = d * kernel[0] + e * kernel[1]
    if kappa != 0:
        return ConicKind.PARABOLA
    # the linear part lives along the nonzero eigendirection u; with
    # s the coordinate there, the equation is trace(Q)*s^2 + (w.u)/|u| * s = lam
    u = (kernel[1], -kernel[0])
    trace = a + c
    wu = d * u[0] + e * u[1]
    uu = u[0] * u[0] + u[1] * u[1]
    disc_s = wu * wu / uu + 4 * trace * lam
    if disc_s < 0:
        return ConicKind.EMPTY
    return ConicKind.DEGENERATE  # parallel line pair, or a double line


# -- quadric classification -------------------------------------------------------

_QUADRIC_TABLE = {
    (3, 0, 0): QuadricKind.ELLIPSOID,
    (2, 0, 1): QuadricKind.ELLIPTIC_PARABOLOID,
    (2, 1, 0): QuadricKind.HYPERBOLOID_ONE_SHEET,
    (1, 2, 0): QuadricKind.HYPERBOLOID_TWO_SHEETS,
    (1, 1, 1): QuadricKind.HYPERBOLIC_PARABOLOID,
    (1, 0, 2): QuadricKind.PARABOLIC_CYLINDER,
}


def classify_quadric(form: TernaryForm) -> QuadricKind:
    """Surface kind from the exact inertia of the form's matrix."""
    if form.is_zero:
        raise ValueError("cannot classify the zero form")
    sig = inertia(form_to_matrix(form)).as_tuple()
    return _QUADRIC_TABLE.get(sig, QuadricKind.OTHER)


def quadric_degeneracy_note(form: TernaryForm) -> str | None:
    """A caveat for rank-deficient forms, where level sets can degenerate.

    The inertia table is applied as stated even when the matrix is singular,
    but e.g. the all-ones form has (x+y+z)^2 = h as its level sets, a pair of
    parallel planes rather than a curved cylinder; the note flags that.
    """
    sig = inertia(form_to_matrix(form))
    if sig.n_zero == 0:
        return None
    return (
        f"rank {3 - sig.n_zero} < 3: the homogeneous classification is by the "
        "inertia table, but level sets of a degenerate form may flatten "
        "(e.g. into parallel planes)"
    )


# -- exact and floating-point elimination -----------------------------------------


def solve_linear_system(
    rows: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]
) -> list[Fraction]:
    """Solve A x = b exactly over Q; raises ValueError if A is singular."""
    n = len(rows)
    a = [[_as_fraction(v) for v in row] + [_as_fraction(r)] for row, r in zip(rows, rhs)]
    if any(len(row) != n + 1 for row in a) or len(a) != n:
        raise ValueError("system must be square")
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise ValueError("singular linear system")
        a[k], a[pivot_row] = a[pivot_row], a[k]
        pivot = a[k][k]
        a[k] = [v / pivot for v in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                factor = a[i][k]
                a[i] = [vi - factor * vk for vi, vk in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def rational_nullspace(rows: Sequence[Sequence[RationalLike]]) -> list[list[Fraction]]:
    """Basis of the exact null space of a (possibly rectangular) matrix."""
    a = [[_as_fraction(v) for v in row] for row in rows]
    if not a:
        return []
    ncols = len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        a[r] = [v / pivot for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [vi - factor * vk for vi, vk in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pcol in enumerate(pivots):
            vec[pcol] = -a[row_idx][free]
        basis.append(vec)
    return basis


def _norm(v: Sequence[float]) -> float:
    return math.sqrt(sum(x * x for x in v))


def _orthonormalize(vectors: list[list[float]]) -> list[list[float]]:
    """Modified Gram-Schmidt; assumes the input is linearly independent."""
    out: list[list[float]] = []
    for vec in vectors:
        w = list(vec)
        for u in out:
            proj = sum(a * b for a, b in zip(w, u))
            w = [a - proj * b for a, b in zip(w, u)]
        nrm = _norm(w)
        if nrm == 0.0:
            raise ArithmeticError("Gram-Schmidt hit a dependent vector")
        out.append([x / nrm for x in w])
    return out


def _canonical_sign(v: list[float]) -> list[float]:
    idx = max(range(len(v)), key=lambda i: abs(v[i]))
    return [-x for x in v] if v[idx] < 0 else v


def _float_null_vector(a: list[list[float]]) -> list[float]:
    """Unit null vector of a numerically rank-deficient 2x2 or 3x3 matrix."""
    n = len(a)
    if n == 2:
        candidates = [[-a[0][1], a[0][0]], [-a[1][1], a[1][0]]]
    else:
        def cross(r, s):
            return [
                r[1] * s[2] - r[2] * s[1],
                r[2] * s[0] - r[0] * s[2],
                r[0] * s[1] - r[1] * s[0],
            ]

        candidates = [cross(a[0], a[1]), cross(a[0], a[2]), cross(a[1], a[2])]
    best = max(candidates, key=_norm)
    nrm = _norm(best)
    if nrm == 0.0:
        raise ArithmeticError("could not isolate a one-dimensional null space")
    return [x / nrm for x in best]


def _newton_polish_real(p: Polynomial, x: float, steps: int = 3) -> float:
    dp = p.derivative()
    for _ in range(steps):
        slope = dp(x)
        if slope == 0.0:
            break
        x = x - p(x) / slope
    return x


def orthogonal_diagonalize(m: SymMatrix) -> Diagonalization:
    """Eigenvalues from the exact characteristic polynomial, eigenvectors
    from null spaces of M - lambda*I, orthonormalized per eigenspace.

    Rational eigenvalues (these include every repeated eigenvalue of a
    rational symmetric matrix) get exact null-space bases; irrational ones
    are necessarily simple, are polished by Newton on the characteristic
    polynomial, and get their eigenvector from floating-point elimination.
    Columns are ordered by ascending eigenvalue.
    """
    if m.n not in (2, 3):
        raise ValueError("orthogonal diagonalization supports 2x2 and 3x3 only")
    n = m.n
    p = char_poly(m)
    rats = rational_roots(p)
    pairs: list[tuple[float, list[list[float]]]] = []

    seen = []
    for lam in rats:
        if lam in seen:
            continue
        seen.append(lam)
        shifted = [
            [m.rows[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)
        ]
        basis = rational_nullspace(shifted)
        assert len(basis) == rats.count(lam)
        floats = _orthonormalize([[float(x) for x in vec] for vec in basis])
        for vec in floats:
            pairs.append((float(lam), [vec]))

    remaining = p
    for lam in rats:
        remaining = remaining // Polynomial([-lam, 1])
    if remaining.degree >= 1:
        if remaining.degree == 1:
            raise ArithmeticError("linear factor should have produced a rational root")
        if remaining.degree == 2:
            irr = [z.real for z in solve_quadratic(remaining)]
        else:
            irr = [z.real for z in solve_cubic_cardano(remaining).roots]
        for lam_f in irr:
            lam_f = _newton_polish_real(remaining, lam_f)
            shifted = [
                [float(m.rows[i][j]) - (lam_f if i == j else 0.0) for j in range(n)]
                for i in range(n)
            ]
            pairs.append((lam_f, [_float_null_vector(shifted)]))

    pairs.sort(key=lambda t: t[0])
    columns = [vec for _, vecs in pairs for vec in vecs]
    columns = _orthonormalize(columns)  # scrub residual cross-eigenspace skew
    columns = [_canonical_sign(v) for v in columns]
    eigenvalues = tuple(lam for lam, vecs in pairs for _ in vecs)

    s_rows = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    recon_residual = _reconstruction_residual(m, s_rows, eigenvalues)
    return Diagonalization(s_rows, eigenvalues, recon_residual)


def _reconstruction_residual(
    m: SymMatrix, s_rows: tuple[tuple[float, ...], ...], d: tuple[float, ...]
) -> float:
    n = m.n
    worst = 0.0
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += s_rows[i][k] * d[k] * s_rows[j][k]
            worst = max(worst, abs(acc - float(m.rows[i][j])))
    return worst


def diagonal_substitution(
    form: TernaryForm,
) -> tuple[tuple[tuple[float, ...], ...], tuple[float, ...]]:
    """Orthogonal substitution rows (x', y', z' as combinations of x, y, z)
    under which the form becomes lam1*x'^2 + lam2*y'^2 + lam3*z'^2.

    The substitution rows are the rows of S^t, i.e. the eigenvector columns
    of the form's matrix read as linear functionals.
    """
    diag = orthogonal_diagonalize(form_to_matrix(form))
    n = len(diag.D)
    substitution = tuple(
        tuple(diag.S[i][j] for i in range(n)) for j in range(n)
    )
    return substitution, diag.D
