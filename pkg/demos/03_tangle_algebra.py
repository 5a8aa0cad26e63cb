#!/usr/bin/env python3
# The three-dimensional algebra spanned by the basis tangles ll, cc, xx
# under horizontal concatenation (boxtimes).

from linksgould import CC, LL, XX, boxtimes, boxtimes_pow, tt_minus, tt_plus

# cc is the unit; ll is nilpotent -- a closed-off identity strand carries
# quantum dimension zero, so concatenating two of them kills the diagram.
assert boxtimes(CC, XX) == XX
assert not boxtimes(LL, LL)

# xx bx xx spreads over all three basis directions:
prod = boxtimes(XX, XX)
for name, coord in zip(("ll", "cc", "xx"), prod.coords()):
    print(f"(xx bx xx)_{name} = {coord}")

# The clasped cabled-trefoil tangles are just vectors in this algebra.
base = boxtimes(tt_plus(), tt_minus())
print("\nTT+ bx TT- coordinates (term counts):", [len(c) for c in base.coords()])

# Powers grow fast but stay exact; squaring beats step-by-step multiplication
# once coefficients get large, and both give identical results.
p5_binary = boxtimes_pow(base, 5, "binary")
p5_sequential = boxtimes_pow(base, 5, "sequential")
assert p5_binary == p5_sequential
print("5th power coordinate sizes:", [len(c) for c in p5_binary.coords()])

# The product commutes and associates -- geometrically obvious for
# side-by-side concatenation, and true of the stored structure constants.
assert boxtimes(base, XX) == boxtimes(XX, base)
assert boxtimes(boxtimes(base, XX), LL) == boxtimes(base, boxtimes(XX, LL))
print("\ncommutative and associative: ok")
