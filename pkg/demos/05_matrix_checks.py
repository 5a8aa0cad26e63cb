#!/usr/bin/env python3
# The basis tangles as explicit 16x16 matrices on the coupled weight basis
# x_i (x) y_j, and the representation-theoretic facts they satisfy.

from linksgould import cc_matrix, compose, independence_check, ll_matrix, xx_matrix

cc = cc_matrix()

# The cup-over-cap matrix kills every x_i y_j with i != j and spreads each
# diagonal vector with weights (1, -1, -q^-2, q^-2)/s^2.  Those weights sum
# to zero (the quantum dimension of V), so cc composed with itself vanishes.
print("image of x_2 y_2 in direction x_0 y_0:", cc.entry(10, 0))
assert compose(cc, cc).is_zero()
print("cc o cc = 0: ok")

# ll is the identity; composing is a no-op.
assert compose(ll_matrix(), xx_matrix()) == xx_matrix()

# The double crossing fixes the extreme weight vectors outright.
xx = xx_matrix()
print("xx fixes x_0 y_3:", xx.entry(3, 3))
print("xx fixes x_3 y_0:", xx.entry(12, 12))

# Linear independence of the three matrices, checked at two rational sample
# points (a dependence would have to hide on a measure-zero locus to fool
# both).
print("rank 3 at (q,s) = (2,3):", independence_check(2, 3))
print("rank 3 at (q,s) = (3,5):", independence_check(3, 5))
