"""Verification layer over the explicit 16x16 endomorphism matrices.

The basis tangles act on V (x) V* through the matrices stored in the
constants file.  Vertical composition and two rational sample-point rank
checks tie that data back to representation-theoretic facts: the cup-over-cap
matrix squares to zero (quantum dimension zero) and the three matrices are
linearly independent.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import constants
from .laurent import LaurentPoly, ZERO

__all__ = [
    "EndoMatrix",
    "ll_matrix",
    "cc_matrix",
    "xx_matrix",
    "compose",
    "independence_check",
]

DIM = 16  # the coupled basis x_i (x) y_j, i, j in 0..3, flattened to 4i + j


class EndoMatrix:
    """A 16x16 matrix of Laurent polynomials on the coupled weight basis.

    ``entry(m, o)`` is the coefficient of output basis vector o in the image
    of input basis vector m.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: dict[tuple[int, int], LaurentPoly]):
        self._entries = {k: p for k, p in entries.items() if p}

    def entry(self, input_index: int, output_index: int) -> LaurentPoly:
        return self._entries.get((input_index, output_index), ZERO)

    def items(self):
        return self._entries.items()

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))


@lru_cache(maxsize=3)
def _matrix(name: str) -> EndoMatrix:
    return EndoMatrix(constants.matrix_entries(name))


def ll_matrix() -> EndoMatrix:
    """The identity on V (x) V*."""
    return _matrix("ll")


def cc_matrix() -> EndoMatrix:
    """Cup over cap: kills x_i y_j for i != j, spreads the diagonal."""
    return _matrix("cc")


def xx_matrix() -> EndoMatrix:
    """The double crossing."""
    return _matrix("xx")


def compose(a: EndoMatrix, b: EndoMatrix) -> EndoMatrix:
    """Vertical composition: apply b first, then a."""
    out: dict[tuple[int, int], LaurentPoly] = {}
    a_rows: dict[int, list] = {}
    for (mid, o), p in a.items():
        a_rows.setdefault(mid, []).append((o, p))
    for (m, mid), pb in b.items():
        for o, pa in a_rows.get(mid, ()):
            k = (m, o)
            prod = pb * pa
            acc = out.get(k)
            out[k] = prod if acc is None else acc + prod
    return EndoMatrix(out)


def _flatten_at(mat: EndoMatrix, q_val, s_val) -> list[Fraction]:
    return [
        mat.entry(m, o).substitute(q_val, s_val) if mat.entry(m, o) else Fraction(0)
        for m in range(DIM)
        for o in range(DIM)
    ]


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def independence_check(
    q_val=2,
    s_val=3,
    matrices: tuple[EndoMatrix, EndoMatrix, EndoMatrix] | None = None,
) -> bool:
    """True iff {ll, cc, xx}, flattened and evaluated at the rational sample
    point, span a rank-3 space.

    A false negative would need the sample point to lie on a measure-zero
    locus, which is why callers check a second point as well.
    """
    if matrices is None:
        matrices = (ll_matrix(), cc_matrix(), xx_matrix())
    rows = [_flatten_at(m, q_val, s_val) for m in matrices]
    return _rank(rows) == 3
