"""Multiplication backend for two-variable Laurent polynomial dicts.

Small products use the schoolbook dict loop.  Large products are evaluated by
Kronecker substitution: each operand is packed into one big integer with a
fixed-width signed digit per lattice point of the product support, the two
integers are multiplied (GMP, via gmpy2, does this in quasi-linear time), and
the digits of the result are read back off.  The digit width is chosen from
an a priori bound on the product's coefficients, so the round trip is exact.

Polynomials here are plain dicts mapping ``(sexp, qexp)`` to nonzero ints;
this module has no dependency on the LaurentPoly wrapper.
"""

from __future__ import annotations

from math import gcd

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = None

# Schoolbook is preferred below this many pairwise coefficient products.
_SCHOOLBOOK_LIMIT = 50_000

# Kronecker packs the full bounding grid of the product; refuse it when the
# grid would dwarf the schoolbook work (extremely sparse, wide supports).
_MAX_GRID_WASTE = 4


def multiply(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) == 1:
        ((se, qe), c) = next(iter(a.items()))
        return _monomial_product(b, se, qe, c)
    if len(b) == 1:
        ((se, qe), c) = next(iter(b.items()))
        return _monomial_product(a, se, qe, c)
    pairs = len(a) * len(b)
    if pairs <= _SCHOOLBOOK_LIMIT:
        return _schoolbook(a, b)
    grid = _grid_params(a, b)
    if grid.ndigits * _MAX_GRID_WASTE > pairs:
        return _schoolbook(a, b)
    return _kronecker(a, b, grid)


def _monomial_product(d: dict, se: int, qe: int, c: int) -> dict:
    if c == 1 and se == 0 and qe == 0:
        return dict(d)
    return {(s + se, q + qe): v * c for (s, q), v in d.items()}


def _schoolbook(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    bitems = list(b.items())
    for (sa, qa), ca in a.items():
        for (sb, qb), cb in bitems:
            k = (sa + sb, qa + qb)
            v = get(k)
            out[k] = ca * cb if v is None else v + ca * cb
    return {k: v for k, v in out.items() if v}


class _Grid:
    """Common packing lattice for one product: origin, strides, extents."""

    __slots__ = (
        "s_origin", "q_origin", "gs", "gq", "width", "height", "ndigits",
        "coeff_bound",
    )

    def __init__(self, a: dict, b: dict):
        sa_lo, sa_hi, qa_lo, qa_hi = _extents(a)
        sb_lo, sb_hi, qb_lo, qb_hi = _extents(b)
        gs = gq = 0
        for se, qe in a:
            gs = gcd(gs, se - sa_lo)
            gq = gcd(gq, qe - qa_lo)
        for se, qe in b:
            gs = gcd(gs, se - sb_lo)
            gq = gcd(gq, qe - qb_lo)
        self.gs = gs = gs or 1
        self.gq = gq = gq or 1
        self.s_origin = sa_lo + sb_lo
        self.q_origin = qa_lo + qb_lo
        self.width = (qa_hi - qa_lo) // gq + (qb_hi - qb_lo) // gq + 1
        self.height = (sa_hi - sa_lo) // gs + (sb_hi - sb_lo) // gs + 1
        self.ndigits = self.width * self.height
        l1a = maxa = l1b = maxb = 0
        for c in a.values():
            c = -c if c < 0 else c
            l1a += c
            if c > maxa:
                maxa = c
        for c in b.values():
            c = -c if c < 0 else c
            l1b += c
            if c > maxb:
                maxb = c
        self.coeff_bound = min(l1a * maxb, l1b * maxa)


def _extents(d: dict) -> tuple[int, int, int, int]:
    it = iter(d)
    se, qe = next(it)
    s_lo = s_hi = se
    q_lo = q_hi = qe
    for se, qe in it:
        if se < s_lo:
            s_lo = se
        elif se > s_hi:
            s_hi = se
        if qe < q_lo:
            q_lo = qe
        elif qe > q_hi:
            q_hi = qe
    return s_lo, s_hi, q_lo, q_hi


def _grid_params(a: dict, b: dict) -> _Grid:
    return _Grid(a, b)


def _pack(d: dict, grid: _Grid, s_base: int, q_base: int, nbytes: int) -> int:
    """Pack d into sum(coeff * 2**(8*nbytes*index)) over grid indices."""
    gs, gq, width = grid.gs, grid.gq, grid.width
    size = grid.ndigits * nbytes
    pos = bytearray(size)
    neg = None
    for (se, qe), c in d.items():
        off = (((se - s_base) // gs) * width + (qe - q_base) // gq) * nbytes
        if c > 0:
            pos[off : off + nbytes] = c.to_bytes(nbytes, "little")
        else:
            if neg is None:
                neg = bytearray(size)
            neg[off : off + nbytes] = (-c).to_bytes(nbytes, "little")
    value = int.from_bytes(pos, "little")
    if neg is not None:
        value -= int.from_bytes(neg, "little")
    return value


def _kronecker(a: dict, b: dict, grid: _Grid) -> dict:
    # Digit width: product coefficients are bounded by grid.coeff_bound, and
    # the offset trick below needs |coeff| strictly below half a digit.
    nbytes = (grid.coeff_bound.bit_length() + 2 + 7) // 8
    sa_lo = min(k[0] for k in a)
    qa_lo = min(k[1] for k in a)
    sb_lo = min(k[0] for k in b)
    qb_lo = min(k[1] for k in b)
    pa = _pack(a, grid, sa_lo, qa_lo, nbytes)
    pb = _pack(b, grid, sb_lo, qb_lo, nbytes)
    if mpz is not None:
        prod = int(mpz(pa) * mpz(pb))
    else:  # pragma: no cover
        prod = pa * pb
    return _unpack(prod, grid, nbytes)


def _unpack(value: int, grid: _Grid, nbytes: int) -> dict:
    ndigits = grid.ndigits
    half = 1 << (8 * nbytes - 1)
    half_pat = half.to_bytes(nbytes, "little")
    # Adding half to every digit makes them all nonnegative, so a single
    # to_bytes exposes them without any borrow propagation.
    value += int.from_bytes(half_pat * ndigits, "little")
    buf = value.to_bytes(ndigits * nbytes + nbytes, "little")
    out: dict = {}
    s_origin, q_origin = grid.s_origin, grid.q_origin
    gs, gq, width = grid.gs, grid.gq, grid.width
    from_bytes = int.from_bytes
    row_bytes = width * nbytes
    for row in range(grid.height):
        sexp = s_origin + row * gs
        base = row * row_bytes
        qexp = q_origin
        for off in range(base, base + row_bytes, nbytes):
            chunk = buf[off : off + nbytes]
            if chunk != half_pat:
                c = from_bytes(chunk, "little") - half
                if c:
                    out[(sexp, qexp)] = c
            qexp += gq
    return out
