#!/usr/bin/env python3
# Recovering the (ll, cc, xx) components of an endomorphism from its three
# partial-trace scalars, by solving the 3x3 linear system exactly.

from linksgould import (
    EndoVec,
    InconsistentTraces,
    LaurentPoly,
    TraceTriple,
    extract,
    forward_traces,
    tt_plus,
)

P = LaurentPoly.parse

# Forward direction: the traces any component vector would produce.
vec = EndoVec(P("q - q^-1"), P("s^2"), P("3"))
triple = forward_traces(vec)
print("tr_R        =", triple.tr_right)
print("tr_T        =", triple.tr_top)
print("twisted tr_R =", triple.tr_twisted_right)

# Inverse direction: Cramer's rule plus exact division lands back exactly.
assert extract(triple) == vec
print("round trip: ok")

# The clasped cabling vector satisfies the same relation, of course.
assert extract(forward_traces(tt_plus())) == tt_plus()

# A triple that no endomorphism produces fails the divisibility check
# rather than silently returning rational functions.
try:
    extract(TraceTriple(P("1"), P("1"), P("1")))
except InconsistentTraces as exc:
    print("\nrejected fake traces:", exc)
