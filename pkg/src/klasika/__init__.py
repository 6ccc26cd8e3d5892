"""klasika: exact-arithmetic classical algebra.

Discriminants by resultant and by Newton power sums, closed-form quadratic
and cubic solution, quadratic-form classification of conics and quadric
surfaces, compass-and-straightedge constructibility verdicts, and symbolic
integration of rational functions.  All symbolic work runs over exact
rationals; floating point appears only where roots or eigenvectors are
genuinely irrational.
"""

from .construct import (
    Add,
    ConstructibilityVerdict,
    Div,
    Mul,
    Num,
    Sqrt,
    Sub,
    circle_squaring,
    cube_doubling,
    cube_scaling,
    degree_power_of_two_check,
    eval_constructible,
    is_fermat_prime,
    ngon_constructible,
    parse_constructible,
    trisectable,
)
from .disc import (
    PowerSums,
    SquareMatrix,
    determinant,
    discriminant_hankel,
    discriminant_resultant,
    has_repeated_roots,
    power_sums,
    resultant,
    sylvester_matrix,
)
from .exact import Polynomial, Rational, poly_gcd, rational_roots
from .forms import (
    BinaryForm,
    ConicKind,
    Diagonalization,
    Inertia,
    QuadricKind,
    SymMatrix,
    TernaryForm,
    char_poly,
    classify_conic,
    classify_quadric,
    diagonal_substitution,
    form_discriminant,
    form_to_matrix,
    inertia,
    is_positive_definite,
    matrix_to_form,
    orthogonal_diagonalize,
    rational_nullspace,
    solve_linear_system,
    transform_form,
)
from .ratfun import (
    ConicParam,
    PartialFractions,
    RealFactorization,
    SymbolicAntiderivative,
    UnsupportedFactorizationError,
    ellipse_area,
    ellipse_perimeter,
    factor_real,
    integrate_rational,
    parametrize_conic,
    partial_fractions,
)
from .roots import (
    CubicRoots,
    DepressedPolynomial,
    depress,
    roots_of_unity,
    solve_cubic_cardano,
    solve_quadratic,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "Rational",
    "poly_gcd",
    "rational_roots",
    "SquareMatrix",
    "PowerSums",
    "determinant",
    "sylvester_matrix",
    "resultant",
    "power_sums",
    "discriminant_resultant",
    "discriminant_hankel",
    "has_repeated_roots",
    "DepressedPolynomial",
    "CubicRoots",
    "depress",
    "solve_quadratic",
    "solve_cubic_cardano",
    "roots_of_unity",
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
    "orthogonal_diagonalize",
    "diagonal_substitution",
    "solve_linear_system",
    "rational_nullspace",
    "Num",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Sqrt",
    "ConstructibilityVerdict",
    "parse_constructible",
    "eval_constructible",
    "is_fermat_prime",
    "ngon_constructible",
    "trisectable",
    "cube_scaling",
    "cube_doubling",
    "circle_squaring",
    "degree_power_of_two_check",
    "UnsupportedFactorizationError",
    "RealFactorization",
    "PartialFractions",
    "SymbolicAntiderivative",
    "ConicParam",
    "factor_real",
    "partial_fractions",
    "integrate_rational",
    "parametrize_conic",
    "ellipse_area",
    "ellipse_perimeter",
]
