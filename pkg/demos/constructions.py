"""The classical compass-and-straightedge impossibilities, made checkable.

Constructible lengths live in towers of quadratic extensions of the
rationals, so each has degree a power of two over Q.  A cubic with no
rational root is irreducible, its roots have degree three, and three is not
a power of two: that single argument settles angle trisection and cube
doubling.  Regular polygons reduce to Fermat primes.
"""

from fractions import Fraction

from klasika import (
    cube_doubling,
    eval_constructible,
    is_fermat_prime,
    ngon_constructible,
    parse_constructible,
    trisectable,
)

# Which regular n-gons can be drawn?
print("n-gon constructibility, n = 3..25:")
row = []
for n in range(3, 26):
    verdict = ngon_constructible(n)
    row.append(f"{n}:{'yes' if verdict.constructible else 'no '}")
print("  " + "  ".join(row[:12]))
print("  " + "  ".join(row[12:]))

print("\nthe five known Fermat primes:", [p for p in range(2, 70000) if is_fermat_prime(p)])
print("9 fails because", ngon_constructible(9).reason)
print("7 fails because", ngon_constructible(7).reason)

# Trisection: cos(alpha) is a root of 4x^3 - 3x - cos(3 alpha).
print("\ntrisection verdicts:")
for value, label in [
    (Fraction(1, 2), "60 degrees (cos = 1/2)"),
    (Fraction(1, 3), "the angle with cos = 1/3"),
    (Fraction(-1, 2), "120 degrees"),
    (Fraction(0), "90 degrees"),
]:
    verdict = trisectable(value)
    word = "trisectable" if verdict.constructible else "NOT trisectable"
    print(f"  {label:28s} {word}")
    print(f"    {verdict.reason}")

print("\ncube doubling:", cube_doubling().reason)

# Constructible numbers themselves: expression towers with a degree bound.
for text in ("sqrt(2)", "(1+sqrt(5))/4", "sqrt(2+sqrt(2))"):
    value, bound = eval_constructible(parse_constructible(text))
    print(f"\n{text} = {value!r}")
    print(f"  lies in a quadratic tower of degree at most {bound} over Q")
