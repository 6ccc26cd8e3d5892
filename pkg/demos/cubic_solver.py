"""Solving the cubic by radicals: depression, then the radical formulas.

Any cubic can be shifted (x = y - b/3a) into the form y^3 + ay + b with no
quadratic term; that shift is exact rational arithmetic.  The depressed
cubic splits via y = u + v with u^3 + v^3 = -b and uv = -a/3, which is a
quadratic in disguise, hence the radical formulas.
"""

from klasika import Polynomial, depress, roots_of_unity, solve_cubic_cardano

f = Polynomial([-6, 11, -6, 1])  # x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
dep = depress(f)
print("x^3 - 6x^2 + 11x - 6 depresses to", dep.poly, "with shift", dep.shift)

out = solve_cubic_cardano(f)
print("roots:", [f"{z.real:+.12f}{z.imag:+.12f}i" for z in out.roots])
print("residuals:", [f"{r:.2e}" for r in out.residuals])

# The casus irreducibilis: all three roots real, yet the radical formulas
# route through complex numbers.  8x^3 - 6x - 1 is also the polynomial that
# dooms the trisection of 60 degrees (see constructions.py).
g = Polynomial([-1, -6, 0, 8])
out = solve_cubic_cardano(g)
print("\n8x^3 - 6x - 1 has three real roots:")
for z in out.roots:
    print(f"  {z.real:+.15f}  (imaginary part {z.imag:.1e})")

# cos(20 degrees) should be among them:
import math

print("cos(20 deg) =", f"{math.cos(math.radians(20)):+.15f}")

# And the equation x^3 = 1 exercised directly:
print("\ncube roots of unity via the solver:")
for z in solve_cubic_cardano(Polynomial([-1, 0, 0, 1])).roots:
    print(f"  {z.real:+.15f} {z.imag:+.15f}i")
print("compare with the unit-circle construction:")
for z in roots_of_unity(3):
    print(f"  {z.real:+.15f} {z.imag:+.15f}i")
