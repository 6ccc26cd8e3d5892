import cmath
import math
from fractions import Fraction

import pytest

from klasika.exact import Polynomial
from klasika.roots import (
    depress,
    residual_tolerance,
    roots_of_unity,
    solve_cubic_cardano,
    solve_quadratic,
)

from conftest import rand_coeffs, rand_fraction

EPS_CUBE = complex(-0.5, math.sqrt(3) / 2)


def test_depress_perfect_cube():
    dep = depress(Polynomial([1, 3, 3, 1]))  # (x+1)^3
    assert dep.poly == Polynomial([0, 0, 0, 1])
    assert dep.shift == 1


def test_depress_quadratic_completes_the_square(rng):
    for _ in range(50):
        b, c = rand_fraction(rng), rand_fraction(rng)
        dep = depress(Polynomial([c, b, 1]))
        assert dep.shift == b / 2
        assert dep.poly == Polynomial([c - b * b / 4, 0, 1])


def test_depress_factored_cubic():
    dep = depress(Polynomial([-6, 11, -6, 1]))  # (x-1)(x-2)(x-3)
    assert dep.poly == Polynomial([0, -1, 0, 1])  # y^3 - y
    assert dep.shift == -2
    # roots of y^3 - y are -1, 0, 1; shifting back gives 1, 2, 3
    assert sorted(y - dep.shift for y in (-1, 0, 1)) == [1, 2, 3]


def test_depress_requires_degree_2():
    with pytest.raises(ValueError):
        depress(Polynomial([1, 2]))


def test_depression_roundtrip_exact(rng):
    for _ in range(500):
        degree = rng.choice((3, 4))
        f = Polynomial(rand_coeffs(rng, degree))
        dep = depress(f)
        assert dep.poly.taylor_shift(dep.shift) == f.monic()
        assert dep.poly[degree - 1] == 0


def test_solve_quadratic_examples():
    r = solve_quadratic(Polynomial([-4, 0, 1]))
    assert r == (complex(-2), complex(2))
    r = solve_quadratic(Polynomial([1, 0, 1]))
    assert r[0].imag == -r[1].imag and r[0].real == r[1].real == 0
    assert abs(r[1] - 1j) < 1e-14
    r = solve_quadratic(Polynomial([2, -3, 1]))
    assert abs(r[0] - 1) < 1e-12 and abs(r[1] - 2) < 1e-12


def test_solve_quadratic_rejects_other_degrees():
    with pytest.raises(ValueError):
        solve_quadratic(Polynomial([1, 1]))
    with pytest.raises(ValueError):
        solve_quadratic(Polynomial([1, 0, 0, 1]))


def test_cardano_cube_roots_of_unity():
    out = solve_cubic_cardano(Polynomial([-1, 0, 0, 1]))  # x^3 = 1
    expected = [1, EPS_CUBE, EPS_CUBE**2]
    for want in expected:
        assert min(abs(z - want) for z in out.roots) < 1e-12
    assert max(out.residuals) < 1e-12


def test_cardano_scaled_roots_of_unity():
    out = solve_cubic_cardano(Polynomial([-8, 0, 0, 1]))  # y^3 - 8
    for want in (2, 2 * EPS_CUBE, 2 * EPS_CUBE**2):
        assert min(abs(z - want) for z in out.roots) < 1e-12


def test_cardano_distinct_integer_roots():
    out = solve_cubic_cardano(Polynomial([-6, 11, -6, 1]))
    got = sorted(z.real for z in out.roots)
    assert max(abs(z.imag) for z in out.roots) == 0.0
    assert max(abs(g - w) for g, w in zip(got, (1, 2, 3))) < 1e-12


def test_cardano_residuals_on_random_cubics(rng):
    for _ in range(300):
        f = Polynomial(rand_coeffs(rng, 3, lo=-20, hi=20, max_den=5))
        out = solve_cubic_cardano(f)
        assert max(out.residuals) < residual_tolerance(f)


def test_cardano_vieta(rng):
    for _ in range(300):
        f = Polynomial(rand_coeffs(rng, 3, lo=-20, hi=20, max_den=5))
        out = solve_cubic_cardano(f)
        total = sum(out.roots)
        prod = out.roots[0] * out.roots[1] * out.roots[2]
        want_sum = complex(-f[2] / f[3])
        want_prod = complex(-f[0] / f[3])
        scale = 1.0 + abs(want_sum) + abs(want_prod)
        assert abs(total - want_sum) < 1e-8 * scale
        assert abs(prod - want_prod) < 1e-8 * scale


def test_cardano_repeated_roots():
    out = solve_cubic_cardano(Polynomial([-1, 3, -3, 1]))  # (x-1)^3
    for z in out.roots:
        assert abs(z - 1) < 1e-6
    out = solve_cubic_cardano(Polynomial([0, 0, 0, 5]))  # 5x^3
    for z in out.roots:
        assert abs(z) < 1e-12


def test_cardano_rejects_other_degrees():
    with pytest.raises(ValueError):
        solve_cubic_cardano(Polynomial([1, 0, 1]))


def test_roots_of_unity_small():
    assert roots_of_unity(1) == [1 + 0j]
    four = roots_of_unity(4)
    for got, want in zip(four, (1, 1j, -1, -1j)):
        assert abs(got - want) < 1e-12
    assert four[0] == 1 + 0j  # exactly


def test_roots_of_unity_matches_cubic_solver():
    by_solver = solve_cubic_cardano(Polynomial([-1, 0, 0, 1])).roots
    for z in roots_of_unity(3):
        assert min(abs(z - w) for w in by_solver) < 1e-12


def test_roots_of_unity_group_structure():
    for n in range(1, 13):
        zs = roots_of_unity(n)
        assert len(zs) == n
        for z in zs:
            assert abs(z**n - 1) < 1e-12
        # closure under multiplication
        for a in zs:
            for b in zs:
                assert min(abs(a * b - c) for c in zs) < 1e-9


def test_roots_of_unity_rejects_zero():
    with pytest.raises(ValueError):
        roots_of_unity(0)
