"""Character-decomposition fast path for large concatenation powers.

The component algebra is commutative of dimension 3 with ll nilpotent
(ll bx ll = 0), so it splits as a line plus a 2-dimensional local block:
every element f acts on the line by the scalar

    lam(f) = f_cc + xi2 * f_xx,        xi2 = A - D,  D = 1 - q^-2,

and on the local block by mu(f) + nu(f) x with x^2 = 0, where

    mu(f) = f_cc + A * f_xx,           nu(f) = f_ll + (c1 / D) * f_xx.

Powers are then scalar powers, f^n mapping to (lam^n; mu^n + n mu^(n-1) nu x),
and pulling back to (ll, cc, xx) coordinates costs a few exact divisions by
D.  With the AS* pairing folded in, the invariant itself needs just two big
products:

    D^2 * LG(n) = mu^(n-1) * KA - lam^n * K3,

for small fixed polynomials KA, K3, so an n-th power costs two scalar power
chains instead of a chain of full 3-coordinate products - roughly an order
of magnitude less big-number work.

The chains run entirely in Kronecker-packed form: a polynomial becomes one
big integer with a fixed-width digit per point of a shared lattice, so every
squaring is a single GMP multiplication with no intermediate unpacking.
Digit widths come from rigorous l1-norm bounds (l1 is submultiplicative),
and two lattices are used: a half-size one for the first half of each chain
and a full-size one for the final squarings and folds, since both the digit
width and the column span roughly double on the way up.  Top exponents are
arranged to be even (odd leftovers are absorbed into the small constant
factors), so each chain finishes with one squaring.  All exponents in play
live on the even sublattice, hence the hard-coded stride of 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

from . import constants
from .algebra import EndoVec, boxtimes, tt_plus, tt_minus
from .laurent import ONE, LaurentPoly, NotDivisible

__all__ = ["power_invariant"]

_STRIDE = 2


@dataclass
class _Packed:
    """A packed polynomial: big-int digits plus its lattice origin."""

    val: object
    q0: int
    s0: int


class _Engine:
    """Shared packing lattice: column stride, digit width, helpers."""

    def __init__(self, width: int, nbytes: int):
        self.width = width
        self.nbytes = nbytes
        self.digit_bits = 8 * nbytes
        self.half = 1 << (self.digit_bits - 1)
        self.half_pat = self.half.to_bytes(nbytes, "little")

    def pack(self, poly: LaurentPoly) -> _Packed:
        d = poly._dict()
        if not d:
            return _Packed(mpz(0), 0, 0)
        q0 = min(k[1] for k in d)
        s0 = min(k[0] for k in d)
        cols = (max(k[1] for k in d) - q0) // _STRIDE
        if cols >= self.width:
            raise ValueError("polynomial wider than the packing lattice")
        rows = (max(k[0] for k in d) - s0) // _STRIDE
        nbytes = self.nbytes
        size = (rows * self.width + cols + 1) * nbytes
        pos = bytearray(size)
        neg = None
        for (se, qe), c in d.items():
            off = (((se - s0) // _STRIDE) * self.width + (qe - q0) // _STRIDE) * nbytes
            if c > 0:
                pos[off : off + nbytes] = c.to_bytes(nbytes, "little")
            else:
                if neg is None:
                    neg = bytearray(size)
                neg[off : off + nbytes] = (-c).to_bytes(nbytes, "little")
        value = int.from_bytes(pos, "little")
        if neg is not None:
            value -= int.from_bytes(neg, "little")
        return _Packed(mpz(value), q0, s0)

    def unpack(self, p: _Packed) -> LaurentPoly:
        value = int(p.val)
        if value == 0:
            return LaurentPoly._raw({})
        nbytes = self.nbytes
        ndigits = abs(value).bit_length() // self.digit_bits + 2
        value += int.from_bytes(self.half_pat * ndigits, "little")
        buf = value.to_bytes(ndigits * nbytes + nbytes, "little")
        del value
        half = self.half
        from_bytes = int.from_bytes
        out = {}
        width = self.width
        row_bytes = width * nbytes
        end = ndigits * nbytes
        nrows = ndigits // width + 1
        for row in range(nrows):
            sexp = p.s0 + row * _STRIDE
            base = row * row_bytes
            qexp = p.q0
            for off in range(base, min(base + row_bytes, end), nbytes):
                c = from_bytes(buf[off : off + nbytes], "little") - half
                if c:
                    out[(sexp, qexp)] = c
                qexp += _STRIDE
        return LaurentPoly._raw(out)

    def repack(self, p: _Packed, target: _Engine) -> _Packed:
        """Re-encode a packed value onto a (wider) lattice, digit by digit,
        without going through a polynomial dict."""
        value = int(p.val)
        if value == 0:
            return _Packed(mpz(0), p.q0, p.s0)
        nb1, nb2 = self.nbytes, target.nbytes
        ndigits = abs(value).bit_length() // self.digit_bits + 2
        value += int.from_bytes(self.half_pat * ndigits, "little")
        buf = value.to_bytes(ndigits * nb1 + nb1, "little")
        del value
        w1, w2 = self.width, target.width
        if w1 > w2:
            raise ValueError("cannot repack onto a narrower lattice")
        nrows = ndigits // w1 + 1
        size = (nrows * w2 + w2) * nb2
        pos = bytearray(size)
        neg = None
        half = self.half
        half_pat = self.half_pat
        from_bytes = int.from_bytes
        for i in range(ndigits):
            chunk = buf[i * nb1 : i * nb1 + nb1]
            if chunk == half_pat:
                continue
            c = from_bytes(chunk, "little") - half
            if not c:
                continue
            row, col = divmod(i, w1)
            off = (row * w2 + col) * nb2
            if c > 0:
                pos[off : off + nb2] = c.to_bytes(nb2, "little")
            else:
                if neg is None:
                    neg = bytearray(size)
                neg[off : off + nb2] = (-c).to_bytes(nb2, "little")
        out = int.from_bytes(pos, "little")
        if neg is not None:
            out -= int.from_bytes(neg, "little")
        return _Packed(mpz(out), p.q0, p.s0)

    def mul(self, a: _Packed, b: _Packed) -> _Packed:
        return _Packed(a.val * b.val, a.q0 + b.q0, a.s0 + b.s0)

    def square(self, a: _Packed) -> _Packed:
        return _Packed(a.val * a.val, 2 * a.q0, 2 * a.s0)

    def scale(self, a: _Packed, k: int) -> _Packed:
        return _Packed(a.val * k, a.q0, a.s0)

    def sub(self, a: _Packed, b: _Packed) -> _Packed:
        q0 = min(a.q0, b.q0)
        s0 = min(a.s0, b.s0)
        return _Packed(self._aligned(a, q0, s0) - self._aligned(b, q0, s0), q0, s0)

    def _aligned(self, p: _Packed, q0: int, s0: int):
        delta = ((p.s0 - s0) // _STRIDE) * self.width + (p.q0 - q0) // _STRIDE
        return p.val << (delta * self.digit_bits) if delta else p.val

    def pow(self, base: LaurentPoly, n: int) -> _Packed:
        """Left-to-right binary power chain, fully packed.

        Processing the exponent from its top bit keeps every non-square
        multiplication against the original (small) base.
        """
        if n == 0:
            return self.pack(ONE)
        packed_base = self.pack(base)
        result = packed_base
        for bit in bin(n)[3:]:
            result = self.square(result)
            if bit == "1":
                result = self.mul(result, packed_base)
        return result


def _l1(p: LaurentPoly) -> int:
    return sum(abs(m.coeff) for m in p.terms())


def _cols(p: LaurentPoly) -> int:
    d = p._dict()
    if not d:
        return 0
    qs = [k[1] for k in d]
    return (max(qs) - min(qs)) // _STRIDE


def _qrange(p: LaurentPoly) -> tuple[int, int]:
    d = p._dict()
    if not d:
        return (0, 0)
    qs = [k[1] for k in d]
    return (min(qs), max(qs))


def _rmul(*ranges: tuple[int, int]) -> tuple[int, int]:
    return (sum(r[0] for r in ranges), sum(r[1] for r in ranges))


def _rpow(r: tuple[int, int], k: int) -> tuple[int, int]:
    return (k * r[0], k * r[1])


def _runion(*ranges: tuple[int, int]) -> tuple[int, int]:
    return (min(r[0] for r in ranges), max(r[1] for r in ranges))


def _div_by_d(p: LaurentPoly, power: int = 1, consume: bool = False) -> LaurentPoly:
    """Exact division by (1 - q^-2)^power (power 1 or 2), by row sweeps.

    Writing r = u * (1 - t)^power with t = q^-2 gives the descending
    recurrences u_e = r_e + u_(e+2) and u_e = r_e + 2 u_(e+2) - u_(e+4).
    A nonzero quotient coefficient within ``power`` steps of the bottom of a
    row's support means the division leaves a remainder.

    ``consume`` empties the input's term store once regrouped, halving peak
    memory; only for temporaries the caller owns outright.
    """
    d = p._dict()
    rows: dict[int, dict[int, int]] = {}
    for (se, qe), c in d.items():
        rows.setdefault(se, {})[qe] = c
    if consume:
        d.clear()
    out: dict[tuple[int, int], int] = {}
    for se, row in rows.items():
        classes: dict[int, list[int]] = {}
        for e in row:
            classes.setdefault(e % _STRIDE, []).append(e)
        for exps in classes.values():
            top, bot = max(exps), min(exps)
            get = row.get
            if power == 1:
                carry = 0
                for e in range(top, bot - 1, -_STRIDE):
                    carry += get(e, 0)
                    if carry:
                        if e < bot + _STRIDE:
                            raise NotDivisible("not divisible by 1 - q^-2")
                        out[(se, e)] = carry
            else:
                u1 = u2 = 0  # u at e + 2 and e + 4
                for e in range(top, bot - 1, -_STRIDE):
                    u = get(e, 0) + 2 * u1 - u2
                    if u:
                        if e < bot + 2 * _STRIDE:
                            raise NotDivisible("not divisible by (1 - q^-2)^2")
                        out[(se, e)] = u
                    u2 = u1
                    u1 = u
    return LaurentPoly._raw(out)


@lru_cache(maxsize=1)
def _split_data():
    """Constants of the character decomposition, derived from stored data."""
    table = constants.structure_table()
    c1, c2, c3 = table[("xx", "xx")]
    A = constants.bracket_constants().A
    D = 2 * A - c3
    xi2 = A - D
    # Premises of the decomposition; failure means corrupted constants.
    if xi2 * xi2 != c2 + c3 * xi2 or A * A != c2 + c3 * A:
        raise constants.ConstantsIntegrityError(
            "structure constants do not satisfy the character equations"
        )
    p1 = boxtimes(tt_plus(), tt_minus())
    lam = p1.cc + xi2 * p1.xx
    mu = p1.cc + A * p1.xx
    if mu - lam != D * p1.xx:
        raise constants.ConstantsIntegrityError(
            "character values are inconsistent with the base vector"
        )
    as_ll, as_cc, as_xx = constants.as_star_raw()
    k1 = D * as_ll * (D * p1.ll + c1 * p1.xx)
    k2 = D * D * as_cc
    k3 = D * as_xx - c1 * as_ll - A * D * as_cc
    c_ll = D * D * p1.ll + c1 * D * p1.xx
    return p1, lam, mu, A, D, c1, k1, k2, k3, c_ll


@lru_cache(maxsize=1)
def _l1_seeds() -> dict:
    """Exact l1 norms of small powers of lam and mu, for tight digit bounds.

    l1 is submultiplicative, so l1(x^k) <= l1(x^8)^(k//8) * l1(x)^(k%8);
    seeding with an actual eighth power tracks the real coefficient growth
    far better than compounding l1(x) alone.
    """
    _, lam, mu, *_ = _split_data()
    return {
        "lam": (_l1(lam), _l1(lam**8)),
        "mu": (_l1(mu), _l1(mu**8)),
    }


def _l1_power_bound(name: str, k: int) -> int:
    """Upper bound for l1(x^j) valid for every j <= k.

    The raw bound eighth^(k//8) * base^(k%8) grows monotonically in steps
    of 8 but not termwise, so the maximum over the top window of 8 covers
    all lower exponents reached along a power chain.
    """
    if k <= 0:
        return 1
    base, eighth = _l1_seeds()[name]
    return max(
        eighth ** (j // 8) * base ** (j % 8) for j in range(max(1, k - 7), k + 1)
    )


def _bytes_for(bound: int) -> int:
    # Strictly more than a sign bit of headroom over the largest digit.
    return (bound.bit_length() + 2 + 7) // 8


def _even_power(base: LaurentPoly, name: str, exponent: int, wide: _Engine) -> _Packed:
    """base**exponent (exponent even) on the wide lattice.

    Beyond trivial exponents, the half chain runs on its own half-size
    lattice (half the column span and roughly half the digit width), then
    the halfway value is re-packed wide for the one final squaring.
    """
    if exponent == 0:
        return wide.pack(ONE)
    if exponent == 2:
        return wide.pack(base * base)
    half_exp = exponent // 2
    w = _cols(base)
    narrow = _Engine(
        half_exp * w + w + 8, _bytes_for(_l1_power_bound(name, half_exp))
    )
    return wide.square(narrow.repack(narrow.pow(base, half_exp), wide))


def power_invariant(n: int, with_vector: bool) -> tuple[LaurentPoly, EndoVec | None]:
    """Invariant polynomial of AS(n) (and optionally the power vector).

    Same value as pairing AS* against the n-th boxtimes power of
    TT+ bx TT-, computed through the character decomposition.
    """
    if n < 1:
        raise ValueError("the decomposition route needs n >= 1")
    p1, lam, mu, A, D, c1, k1, k2, k3, c_ll = _split_data()
    ka = k1 * n + mu * (k2 + k3)

    # Arrange even top exponents: absorb odd leftovers into the constants.
    mu_exp = n - 1
    ka_fold = ka
    if mu_exp & 1:
        mu_exp -= 1
        ka_fold = mu * ka
    lam_exp = n
    k3_fold = k3
    if lam_exp & 1:
        lam_exp -= 1
        k3_fold = lam * k3

    # Shared wide lattice.  Column span: exact q-range arithmetic over every
    # value formed on the lattice, including unions across subtractions
    # (aligning two packed values to a common origin can need more columns
    # than either operand alone).  Digit width: l1 bounds on every value.
    r_mu, r_lam = _qrange(mu), _qrange(lam)
    r_mu_pow = _rpow(r_mu, mu_exp)
    r_lam_pow = _rpow(r_lam, lam_exp)
    r_mu_n1 = _rpow(r_mu, n - 1)
    r_mu_n = _rpow(r_mu, n)
    r_lam_n = _rpow(r_lam, n)
    r_e = _runion(r_mu_n, r_lam_n)
    planned = [
        _runion(_rmul(r_mu_pow, _qrange(ka_fold)), _rmul(r_lam_pow, _qrange(k3_fold))),
        r_mu_pow,
        r_lam_pow,
        r_e,
        _runion(_rmul(_qrange(D), r_mu_n), _rmul(_qrange(A), r_e)),
        _runion(_rmul(r_mu_n1, _qrange(c_ll)), _rmul(_qrange(c1), r_e)),
    ]
    width = max((hi - lo) // _STRIDE + 1 for lo, hi in planned) + 4
    l1_lam_n = _l1_power_bound("lam", n)
    l1_mu_n1 = _l1_power_bound("mu", n - 1)
    l1_mu_n = l1_mu_n1 * _l1(mu)
    l1_e = l1_mu_n + l1_lam_n
    bounds = [
        l1_mu_n1 * _l1(ka_fold) + l1_lam_n * _l1(k3_fold),
        _l1(D) * l1_mu_n + _l1(A) * l1_e,
        n * l1_mu_n1 * _l1(c_ll) + _l1(c1) * l1_e,
        l1_e,
    ]
    eng = _Engine(width, _bytes_for(max(bounds)))

    mu_pow = _even_power(mu, "mu", mu_exp, eng)
    lam_pow = _even_power(lam, "lam", lam_exp, eng)

    # D^2 * LG = mu^(n-1) * (n K1 + mu (K2 + K3)) - lam^n * K3
    left = eng.mul(mu_pow, eng.pack(ka_fold))
    right = eng.mul(lam_pow, eng.pack(k3_fold))
    if not with_vector:
        mu_pow = lam_pow = None
    folded = eng.sub(left, right)
    del left, right
    raw = eng.unpack(folded)
    del folded
    poly = _div_by_d(raw, power=2, consume=True)
    del raw

    if not with_vector:
        return poly, None

    # Recover the full exponents mu^(n-1), mu^n, lam^n on the wide lattice.
    mu_n1 = mu_pow if mu_exp == n - 1 else eng.mul(mu_pow, eng.pack(mu))
    mu_n = eng.mul(mu_n1, eng.pack(mu))
    lam_n = lam_pow if lam_exp == n else eng.mul(lam_pow, eng.pack(lam))

    e = eng.sub(mu_n, lam_n)  # mu^n - lam^n = D * P_xx
    v_xx = _div_by_d(eng.unpack(e))
    # D * P_cc = D mu^n - A E
    dcc = eng.sub(eng.mul(eng.pack(D), mu_n), eng.mul(eng.pack(A), e))
    v_cc = _div_by_d(eng.unpack(dcc))
    # D^2 * P_ll = n mu^(n-1) (D^2 P1_ll + c1 D P1_xx) - c1 E
    dll = eng.sub(eng.scale(eng.mul(mu_n1, eng.pack(c_ll)), n), eng.mul(eng.pack(c1), e))
    v_ll = _div_by_d(eng.unpack(dll), power=2)
    return poly, EndoVec(v_ll, v_cc, v_xx)
