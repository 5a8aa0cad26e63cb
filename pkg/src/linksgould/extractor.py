"""Recover basis components of an endomorphism from its partial traces.

The right, top and twisted-right partial traces of a basis tangle are known
scalars, so the traces of an arbitrary endomorphism f determine its
components (f_ll, f_cc, f_xx) through a 3x3 linear system M v = t.  The
system is solved exactly by Cramer's rule followed by exact division by
det(M); a failing division is the signature that the given triple does not
come from an actual endomorphism, and raises :class:`InconsistentTraces`.

Staying in the polynomial ring this way avoids rational-function arithmetic
entirely: valid inputs always divide out.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import constants
from .algebra import EndoVec
from .laurent import LaurentPoly, NotDivisible, ZERO

__all__ = ["TraceTriple", "InconsistentTraces", "system_matrix", "extract", "forward_traces"]


class InconsistentTraces(ValueError):
    """The trace triple is not in the image of the component system."""


@dataclass(frozen=True)
class TraceTriple:
    """Scalars of the right, top and (negatively) twisted right traces."""

    tr_right: LaurentPoly
    tr_top: LaurentPoly
    tr_twisted_right: LaurentPoly

    def coords(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.tr_right, self.tr_top, self.tr_twisted_right)


def system_matrix() -> tuple[tuple[LaurentPoly, ...], ...]:
    """The 3x3 matrix M of the component system (trace table columnwise)."""
    return constants.trace_table()


def _det3(m) -> LaurentPoly:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def system_determinant() -> LaurentPoly:
    return _det3(system_matrix())


def extract(t: TraceTriple) -> EndoVec:
    """Solve M v = t exactly for the component vector v.

    Raises :class:`InconsistentTraces` when some Cramer numerator is not
    divisible by det(M), i.e. the triple cannot be a triple of traces.
    """
    m = system_matrix()
    det = system_determinant()
    rhs = t.coords()
    comps = []
    for col in range(3):
        replaced = tuple(
            tuple(rhs[r] if c == col else m[r][c] for c in range(3)) for r in range(3)
        )
        numerator = _det3(replaced)
        try:
            comps.append(numerator.exact_div(det))
        except NotDivisible as exc:
            raise InconsistentTraces(
                f"component {constants.BASIS[col]!r}: Cramer numerator is not "
                f"divisible by det(M); the triple is not a trace triple"
            ) from exc
    return EndoVec(*comps)


def forward_traces(v: EndoVec) -> TraceTriple:
    """Apply M to a component vector: the traces its endomorphism would have."""
    m = system_matrix()
    coords = v.coords()
    rows = []
    for r in range(3):
        total = ZERO
        for c in range(3):
            if m[r][c] and coords[c]:
                total = total + m[r][c] * coords[c]
        rows.append(total)
    return TraceTriple(*rows)
