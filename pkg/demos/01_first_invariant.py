#!/usr/bin/env python3
# Compute the Links-Gould polynomial of the first Allen-Swenberg link and
# poke at it: spot coefficients, the q = 1 collapse, exact evaluation.

from fractions import Fraction

from linksgould import lg_as, pair_as_star
from linksgould.cli import to_latex

result = lg_as(1, use_cache=False)
poly = result.polynomial

print(f"LG_AS(1) has {len(poly)} terms, s-span {poly.s_span()}")

# A few individual coefficients.  coefficient(qexp, sexp) is exact.
print("coefficient of q^2  s^12 :", poly.coefficient(2, 12))    # 8
print("coefficient of q^-20 s^12:", poly.coefficient(-20, 12))  # 12
print("coefficient of q^2  s^0  :", poly.coefficient(2, 0))     # 10

# The polynomial is fixed by the symmetry s -> q^-1 s^-1 ...
assert poly.apply_involution() == poly

# ... and collapses at q = 1 to (s - s^-1)^4, the square of the Alexander
# polynomial of the connected sum of two Hopf links evaluated at s^2.  That
# is exactly why the Alexander polynomial cannot tell these links apart.
print("\nLG_AS(1)(s, 1) =", poly.substitute_q1())

# Exact rational evaluation anywhere (nonzero) in (q, s):
print("LG_AS(1)(q=1, s=2) =", poly.substitute(1, 2), "=", Fraction(81, 16))

# The intermediate power vector pairs back to the same polynomial.
assert pair_as_star(result.power_vector) == poly

# Grouped rendering pairs each term with its mirror image, which is how the
# polynomial is most readable by eye.
print("\nfirst lines of the grouped LaTeX form:")
print("\n".join(to_latex(poly).splitlines()[:2]))
