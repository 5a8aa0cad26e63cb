"""The three-dimensional commutative algebra of endomorphism components.

Endomorphisms of V (x) V* are spanned by the basis tangles ll (identity),
cc (cup over cap) and xx (double crossing); an :class:`EndoVec` holds the
three coordinates of such an endomorphism, each an exact Laurent polynomial.

Horizontal concatenation of two tangles is the bilinear product ``boxtimes``
whose structure constants on basis pairs come from the constants store.  It
is commutative and associative with unit cc; ll squares to zero, reflecting
the vanishing quantum dimension of V.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import constants
from .laurent import ONE, ZERO, LaurentPoly

__all__ = [
    "EndoVec",
    "LL",
    "CC",
    "XX",
    "boxtimes",
    "boxtimes_pow",
    "pair_as_star",
    "tt_plus",
    "tt_minus",
    "as_star_row",
]


@dataclass(frozen=True)
class EndoVec:
    """Coordinates of an endomorphism in the ordered basis (ll, cc, xx)."""

    ll: LaurentPoly
    cc: LaurentPoly
    xx: LaurentPoly

    def coords(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.ll, self.cc, self.xx)

    def __add__(self, other: EndoVec) -> EndoVec:
        return EndoVec(self.ll + other.ll, self.cc + other.cc, self.xx + other.xx)

    def __sub__(self, other: EndoVec) -> EndoVec:
        return EndoVec(self.ll - other.ll, self.cc - other.cc, self.xx - other.xx)

    def scale(self, factor: LaurentPoly | int) -> EndoVec:
        return EndoVec(self.ll * factor, self.cc * factor, self.xx * factor)

    def apply_involution(self) -> EndoVec:
        return EndoVec(
            self.ll.apply_involution(),
            self.cc.apply_involution(),
            self.xx.apply_involution(),
        )

    def __bool__(self) -> bool:
        return bool(self.ll) or bool(self.cc) or bool(self.xx)

    def to_triples(self) -> list:
        """Canonical structured form: 3-element array in (ll, cc, xx) order."""
        return [self.ll.to_triples(), self.cc.to_triples(), self.xx.to_triples()]

    @classmethod
    def from_triples(cls, triples) -> EndoVec:
        ll, cc, xx = triples
        return cls(
            LaurentPoly.from_triples(ll),
            LaurentPoly.from_triples(cc),
            LaurentPoly.from_triples(xx),
        )


LL = EndoVec(ONE, ZERO, ZERO)
CC = EndoVec(ZERO, ONE, ZERO)  # the unit of boxtimes
XX = EndoVec(ZERO, ZERO, ONE)


def boxtimes(f: EndoVec, g: EndoVec) -> EndoVec:
    """Horizontal concatenation, extended bilinearly from the basis table.

    The structure table is symmetric, so the double sum over basis pairs is
    folded over unordered pairs; when ``f`` and ``g`` are the same object the
    cross products collapse to one multiplication each.
    """
    table = constants.structure_table()
    names = constants.BASIS
    fc = f.coords()
    gc = g.coords()
    square = f is g or fc == gc
    acc = [ZERO, ZERO, ZERO]
    for i in range(3):
        for j in range(i, 3):
            vec = table[(names[i], names[j])]
            if not any(vec):
                continue
            if i == j:
                if not fc[i] or not gc[i]:
                    continue
                prod = fc[i] * gc[i]
            elif square:
                if not fc[i] or not fc[j]:
                    continue
                prod = (fc[i] * fc[j]) * 2
            else:
                left = fc[i] * gc[j] if fc[i] and gc[j] else ZERO
                right = fc[j] * gc[i] if fc[j] and gc[i] else ZERO
                prod = left + right
                if not prod:
                    continue
            for k in range(3):
                coeff = vec[k]
                if coeff:
                    acc[k] = acc[k] + (prod if coeff == ONE else coeff * prod)
    return EndoVec(*acc)


def boxtimes_pow(f: EndoVec, n: int, strategy: str = "binary") -> EndoVec:
    """n-fold boxtimes power; n = 0 gives the unit cc.

    ``strategy`` selects binary exponentiation (default) or plain sequential
    multiplication, kept as a cross-check oracle: both give identical results,
    but squaring halves the chain length as coefficients grow.
    """
    if n < 0:
        raise ValueError("boxtimes powers need n >= 0")
    if strategy == "binary":
        result = None
        base = f
        while n:
            if n & 1:
                result = base if result is None else boxtimes(result, base)
            n >>= 1
            if n:
                base = boxtimes(base, base)
        return CC if result is None else result
    if strategy == "sequential":
        result = CC
        for _ in range(n):
            result = boxtimes(result, f)
        return result
    raise ValueError(f"unknown power strategy {strategy!r}")


def pair_as_star(f: EndoVec) -> LaurentPoly:
    """Pair a component vector against the closure row AS*.

    Returns ``f_ll * AS*(ll) + f_cc * AS*(cc) + f_xx * AS*(xx)``: the value
    of the closed-up diagram with f spliced in.
    """
    row = constants.as_star_raw()
    total = ZERO
    for coeff, coord in zip(row, f.coords()):
        if coord:
            total = total + coeff * coord
    return total


def tt_plus() -> EndoVec:
    """Component vector of the positively clasped antiparallel (2,6)-cabled trefoil."""
    return EndoVec(*constants.tt_plus_raw())


def tt_minus() -> EndoVec:
    """Component vector of the negatively clasped antiparallel (2,6)-cabled trefoil."""
    return EndoVec(*constants.tt_minus_raw())


def as_star_row() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The three AS* pairing polynomials in basis order."""
    return constants.as_star_raw()
