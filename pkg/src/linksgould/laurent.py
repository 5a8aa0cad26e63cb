"""Exact sparse Laurent polynomials in two variables q and s over the integers.

A polynomial is a finite sum of terms ``c * q^a * s^b`` with nonzero integer
coefficients and integer (possibly negative) exponents.  It is stored as a
dict mapping the exponent pair ``(sexp, qexp)`` to its coefficient; the zero
polynomial is the empty dict.  Canonical term order is descending by s
exponent, then descending by q exponent, which is exactly what sorting the
keys in reverse gives.

Values are immutable after construction and all operations are pure, so
polynomials can be shared freely across threads.

Coefficients are plain Python ints and therefore never overflow.  Products of
large polynomials are routed through :mod:`linksgould._fastmul`, which packs
the operands into big integers so that GMP does the heavy lifting.
"""

from __future__ import annotations

import re
from fractions import Fraction
from heapq import heapify, heappop, heappush
from typing import Iterable, Iterator, NamedTuple

from . import _fastmul

__all__ = [
    "LaurentPoly",
    "Monomial",
    "NotDivisible",
    "ZeroPolynomial",
    "ZeroSubstitution",
    "ZERO",
    "ONE",
    "Q",
    "S",
]


class NotDivisible(ArithmeticError):
    """The numerator is not a ring multiple of the denominator."""


class ZeroSubstitution(ValueError):
    """Raised when 0 is substituted for a variable with negative exponents."""


class ZeroPolynomial(ValueError):
    """Raised by operations that need at least one term."""


class Monomial(NamedTuple):
    """A single term ``coeff * q^qexp * s^sexp``."""

    coeff: int
    qexp: int
    sexp: int


# Internal dict key: (sexp, qexp).  Sorting keys in reverse yields the
# canonical term order.
_Key = tuple[int, int]

_TERM_RE = re.compile(
    r"^(?P<coeff>\d+)?"
    r"(?:\*?q(?:\^(?P<qexp>[+-]?\d+))?)?"
    r"(?:\*?s(?:\^(?P<sexp>[+-]?\d+))?)?$"
)


class LaurentPoly:
    """An element of the ring of integer Laurent polynomials in q and s.

    >>> p = LaurentPoly.parse("q^2*s^2 - 2 + q^-2*s^-2")
    >>> p * p == p**2
    True
    >>> print((Q - Q**-1) * (Q + Q**-1))
    q^2 - q^-2
    """

    __slots__ = ("_d", "_hash")

    def __init__(self, terms: dict[_Key, int] | None = None):
        d = {}
        if terms:
            for (sexp, qexp), coeff in terms.items():
                if coeff:
                    d[(int(sexp), int(qexp))] = int(coeff)
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict[_Key, int]) -> LaurentPoly:
        # Trusted constructor: d already normalized (no zero coefficients).
        p = cls.__new__(cls)
        p._d = d
        p._hash = None
        return p

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def term(cls, coeff: int, qexp: int = 0, sexp: int = 0) -> LaurentPoly:
        """The monomial ``coeff * q^qexp * s^sexp``."""
        if coeff == 0:
            return ZERO
        return cls._raw({(sexp, qexp): int(coeff)})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> LaurentPoly:
        """Build from ``(coeff, qexp, sexp)`` triples, merging duplicates."""
        d: dict[_Key, int] = {}
        for coeff, qexp, sexp in terms:
            k = (sexp, qexp)
            v = d.get(k, 0) + int(coeff)
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return cls._raw(d)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def terms(self) -> Iterator[Monomial]:
        """Terms in canonical order: descending s exponent, then q exponent."""
        for sexp, qexp in sorted(self._d, reverse=True):
            yield Monomial(self._d[(sexp, qexp)], qexp, sexp)

    def coefficient(self, qexp: int = 0, sexp: int = 0) -> int:
        """Coefficient of ``q^qexp * s^sexp`` (0 if absent)."""
        return self._d.get((sexp, qexp), 0)

    def min_sexp(self) -> int:
        if not self._d:
            raise ZeroPolynomial("the zero polynomial has no terms")
        return min(k[0] for k in self._d)

    def max_sexp(self) -> int:
        if not self._d:
            raise ZeroPolynomial("the zero polynomial has no terms")
        return max(k[0] for k in self._d)

    def s_span(self) -> int:
        """Difference between the maximal and minimal s exponents."""
        if not self._d:
            raise ZeroPolynomial("the zero polynomial has no s-span")
        lo = hi = next(iter(self._d))[0]
        for sexp, _ in self._d:
            if sexp < lo:
                lo = sexp
            elif sexp > hi:
                hi = sexp
        return hi - lo

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._d == other._d
        if isinstance(other, int):
            return self._d == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._d:
                self._hash = hash(0)
            elif len(self._d) == 1 and (0, 0) in self._d:
                # Constants compare equal to ints, so they must hash alike.
                self._hash = hash(self._d[(0, 0)])
            else:
                self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __repr__(self) -> str:
        if len(self._d) <= 24:
            return f"LaurentPoly({self.to_text()!r})"
        return f"<LaurentPoly: {len(self._d)} terms, s-span {self.s_span()}>"

    def __str__(self) -> str:
        return self.to_text()

    # ------------------------------------------------------------------
    # Ring arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._d, other._d
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._d.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly._raw({k: c * other for k, c in self._d.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_fastmul.multiply(self._d, other._d))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._d) == 1:
                ((sexp, qexp), c) = next(iter(self._d.items()))
                if c in (1, -1):
                    coeff = 1 if (c == 1 or n % 2 == 0) else -1
                    return LaurentPoly._raw({(sexp * n, qexp * n): coeff})
            raise ValueError("negative powers exist only for unit monomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Division, substitution, symmetry
    # ------------------------------------------------------------------

    def exact_div(self, den: LaurentPoly) -> LaurentPoly:
        """The unique r with ``r * den == self``, if it exists in the ring.

        Both operands are shifted to ordinary polynomials in Z[q, s] by
        factoring out their minimal exponents, divided under the graded
        lexicographic order with q > s, and the quotient is shifted back.

        Raises :class:`NotDivisible` when no such r exists.
        """
        if not den._d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._d:
            return ZERO
        ns = min(k[0] for k in self._d)
        nq = min(k[1] for k in self._d)
        ds = min(k[0] for k in den._d)
        dq = min(k[1] for k in den._d)
        rem = {(se - ns, qe - nq): c for (se, qe), c in self._d.items()}
        dpoly = [((se - ds, qe - dq), c) for (se, qe), c in den._d.items()]
        # Leading term of the divisor under grlex (total degree, then q).
        (dse, dqe), dc = max(dpoly, key=lambda t: (t[0][0] + t[0][1], t[0][1]))
        heap = [(-(se + qe), -qe) for se, qe in rem]
        heapify(heap)
        quot: dict[_Key, int] = {}
        while heap:
            negdeg, negq = heappop(heap)
            qe = -negq
            se = -negdeg - qe
            c = rem.get((se, qe))
            if not c:
                continue  # stale entry
            if se < dse or qe < dqe or c % dc:
                raise NotDivisible(
                    f"leading term {c}*q^{qe}*s^{se} is not a multiple of the divisor's"
                )
            tse, tqe, tc = se - dse, qe - dqe, c // dc
            quot[(tse, tqe)] = tc
            for (bse, bqe), bc in dpoly:
                k = (tse + bse, tqe + bqe)
                v = rem.get(k, 0) - tc * bc
                if v:
                    rem[k] = v
                    heappush(heap, (-(k[0] + k[1]), -k[1]))
                else:
                    rem.pop(k, None)
        shift_s, shift_q = ns - ds, nq - dq
        return LaurentPoly._raw(
            {(se + shift_s, qe + shift_q): c for (se, qe), c in quot.items()}
        )

    def substitute(self, q_val, s_val) -> Fraction:
        """Exact rational value at ``q = q_val, s = s_val`` (both nonzero)."""
        qv = Fraction(q_val)
        sv = Fraction(s_val)
        if qv == 0 or sv == 0:
            raise ZeroSubstitution("cannot substitute 0 into a Laurent polynomial")
        total = Fraction(0)
        for (sexp, qexp), c in self._d.items():
            total += c * qv**qexp * sv**sexp
        return total

    def substitute_q1(self) -> LaurentPoly:
        """Set q = 1, collapsing to a Laurent polynomial in s alone."""
        out: dict[_Key, int] = {}
        for (sexp, _), c in self._d.items():
            k = (sexp, 0)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly._raw(out)

    def apply_involution(self) -> LaurentPoly:
        """The ring involution ``s -> q^-1 * s^-1`` (q is fixed).

        Each term ``c*q^a*s^b`` maps to ``c*q^(a-b)*s^(-b)``; applying it
        twice is the identity, and it commutes with + and *.
        """
        return LaurentPoly._raw(
            {(-sexp, qexp - sexp): c for (sexp, qexp), c in self._d.items()}
        )

    # ------------------------------------------------------------------
    # Canonical serialization
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. ``8*q^2*s^12 - 4*q^-2 + 1``.

        Terms appear in canonical order; ``q^0``, ``s^0`` and unit
        coefficients are elided.  Two polynomials render identically iff
        they are equal.
        """
        if not self._d:
            return "0"
        parts: list[str] = []
        for coeff, qexp, sexp in self.terms():
            mag = abs(coeff)
            factors = []
            if qexp:
                factors.append("q" if qexp == 1 else f"q^{qexp}")
            if sexp:
                factors.append("s" if sexp == 1 else f"s^{sexp}")
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of :meth:`to_text` (whitespace tolerant)."""
        text = text.strip()
        if text in ("0", "-0", ""):
            return ZERO
        chunks = text.replace(" - ", " + -").split(" + ")
        terms = []
        for chunk in chunks:
            tok = chunk.strip()
            sign = 1
            while tok and tok[0] in "+-":
                if tok[0] == "-":
                    sign = -sign
                tok = tok[1:].lstrip()
            m = _TERM_RE.match(tok)
            if not m or not tok:
                raise ValueError(f"cannot parse term {chunk!r}")
            coeff = int(m.group("coeff")) if m.group("coeff") else 1
            has_q = "q" in tok
            has_s = tok.count("s") > 0
            qexp = (int(m.group("qexp")) if m.group("qexp") else 1) if has_q else 0
            sexp = (int(m.group("sexp")) if m.group("sexp") else 1) if has_s else 0
            if m.group("coeff") is None and not has_q and not has_s:
                raise ValueError(f"cannot parse term {chunk!r}")
            terms.append((sign * coeff, qexp, sexp))
        return cls.from_terms(terms)

    def to_triples(self) -> list[list]:
        """Canonical structured form: ``[coeff-as-string, qexp, sexp]`` triples."""
        return [[str(c), qe, se] for c, qe, se in self.terms()]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable]) -> LaurentPoly:
        return cls.from_terms((int(c), int(qe), int(se)) for c, qe, se in triples)

    # Internal: expose the raw dict to sibling modules (read-only use).
    def _dict(self) -> dict[_Key, int]:
        return self._d


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({(0, 0): 1})
Q = LaurentPoly._raw({(0, 1): 1})
S = LaurentPoly._raw({(1, 0): 1})
