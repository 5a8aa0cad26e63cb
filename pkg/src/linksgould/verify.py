"""Self-verification: every stored constant and derived fact, re-checked.

``run_checks`` exercises the whole stack bottom-up: constants integrity,
bracket identities, the trace system, the concatenation algebra axioms, the
16x16 matrix facts, bit-exact agreement of the n = 1 invariant with its
independently transcribed reference expansion, and the extremal-term /
specialization / genus facts for every n up to a caller-chosen bound.  Each
check yields one line; the suite passes only if every line does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import analysis, constants, matrices
from .algebra import CC, LL, XX, EndoVec, boxtimes, pair_as_star, tt_plus, tt_minus
from .extractor import TraceTriple, extract, forward_traces, system_determinant
from .laurent import LaurentPoly, ONE, ZERO
from .pipeline import baseline_hh, distinguishes, lg_as

__all__ = ["Check", "run_checks"]

ALEXANDER_Q1 = LaurentPoly.from_terms(
    [(1, 0, 4), (-4, 0, 2), (6, 0, 0), (-4, 0, -2), (1, 0, -4)]
)  # (s - s^-1)^4


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _fixed(p: LaurentPoly) -> bool:
    return p.apply_involution() == p


def _random_poly(rng: random.Random, terms: int = 4, emax: int = 4) -> LaurentPoly:
    return LaurentPoly.from_terms(
        (rng.randint(-9, 9), rng.randint(-emax, emax), rng.randint(-emax, emax))
        for _ in range(terms)
    )


def _random_vec(rng: random.Random) -> EndoVec:
    return EndoVec(_random_poly(rng), _random_poly(rng), _random_poly(rng))


def _constants_checks() -> Iterable[Check]:
    digest = constants.checksum()
    yield Check("constants file integrity", True, digest[:23])
    bc = constants.bracket_constants()
    q2 = LaurentPoly.term(1, 2, 0)
    yield Check("bracket identity A*q^2 == B", bc.A * q2 == bc.B)
    yield Check(
        "bracket product matches its factors",
        bc.B == bc.bra_alpha * bc.bra_alpha_plus_1 * LaurentPoly.term(1, 1, 0),
    )
    table = constants.structure_table()
    yield Check(
        "structure constants involution-fixed",
        all(_fixed(p) for vec in table.values() for p in vec),
    )
    yield Check(
        "component vectors involution-fixed",
        all(_fixed(p) for p in tt_plus().coords())
        and all(_fixed(p) for p in tt_minus().coords()),
    )
    yield Check(
        "pairing row involution-fixed",
        all(_fixed(p) for p in constants.as_star_raw()),
    )


def _trace_checks(rng: random.Random) -> Iterable[Check]:
    bc = constants.bracket_constants()
    det = system_determinant()
    expected = bc.A * (LaurentPoly.term(1, 2, 0) + ONE)  # <a><a+1>(q + q^-1)
    yield Check("trace system determinant", det == expected)
    yield Check("determinant involution-fixed", _fixed(det))
    cols = {
        "ll": (TraceTriple(ZERO, ONE, bc.B), LL),
        "cc": (TraceTriple(ONE, ZERO, ONE), CC),
        "xx": (TraceTriple(bc.A, ONE, ZERO), XX),
    }
    ok = all(extract(t) == v for t, v in cols.values())
    yield Check("basis columns extract to basis vectors", ok)
    ok = True
    for _ in range(25):
        v = _random_vec(rng)
        ok = ok and extract(forward_traces(v)) == v
    yield Check("trace round-trip on random vectors", ok)


def _algebra_checks(rng: random.Random) -> Iterable[Check]:
    yield Check("ll bx ll == 0", not boxtimes(LL, LL))
    sample = [_random_vec(rng) for _ in range(6)]
    yield Check(
        "cc is a two-sided unit",
        all(boxtimes(CC, f) == f and boxtimes(f, CC) == f for f in sample),
    )
    yield Check(
        "bx commutative (sample)",
        all(
            boxtimes(f, g) == boxtimes(g, f)
            for f, g in zip(sample, sample[1:])
        ),
    )
    f, g, h = sample[:3]
    yield Check(
        "bx associative (sample)",
        boxtimes(boxtimes(f, g), h) == boxtimes(f, boxtimes(g, h)),
    )


def _matrix_checks() -> Iterable[Check]:
    cc = matrices.cc_matrix()
    yield Check("cc composed with cc is zero", matrices.compose(cc, cc).is_zero())
    ll = matrices.ll_matrix()
    yield Check(
        "ll matrix is the identity",
        all(ll.entry(m, o) == (ONE if m == o else ZERO) for m in range(16) for o in range(16)),
    )
    yield Check("rank 3 at q=2, s=3", matrices.independence_check(2, 3))
    yield Check("rank 3 at q=3, s=5", matrices.independence_check(3, 5))


def _invariant_checks(max_n: int, cache_dir=None) -> Iterable[Check]:
    r1 = lg_as(1, cache_dir=cache_dir)
    ref = constants.lg_as1_reference()
    yield Check("n=1 invariant equals reference expansion, bit-exact", r1.polynomial == ref)
    yield Check(
        "n=1 value at (q,s)=(1,2) is 81/16",
        r1.polynomial.substitute(1, 2) == Fraction(81, 16),
    )
    base = baseline_hh()
    yield Check("baseline s-span is 12", base.s_span() == 12)
    for n in range(1, max_n + 1):
        res = lg_as(n, cache_dir=cache_dir)
        summary = analysis.summarize(res.polynomial)
        lead, trail, span = analysis.predicted_extremes(n)
        checks = [
            summary.leading == lead and summary.trailing == trail,
            summary.s_span == span,
            analysis.asymptotic_oracle(n) == lead,
            _fixed(res.polynomial),
            res.polynomial.substitute_q1() == ALEXANDER_Q1,
            res.power_vector is None or pair_as_star(res.power_vector) == res.polynomial,
            analysis.genus(n, summary.s_span).genus == 2 * n,
            distinguishes(n, cache_dir=cache_dir)[0],
        ]
        yield Check(
            f"n={n}: extremes, span, oracle, symmetry, q=1, pairing, genus, separation",
            all(checks),
            "" if all(checks) else f"failed flags {[i for i, c in enumerate(checks) if not c]}",
        )


def run_checks(
    max_n: int = 10,
    cache_dir=None,
    emit: Callable[[Check], None] | None = None,
) -> list[Check]:
    """Run every check up to max_n; emit each as it completes."""
    rng = random.Random(20260809)
    results: list[Check] = []

    def push(check: Check):
        results.append(check)
        if emit:
            emit(check)

    try:
        for c in _constants_checks():
            push(c)
    except constants.ConstantsIntegrityError as exc:
        push(Check("constants file integrity", False, str(exc)))
        return results
    for group in (_trace_checks(rng), _algebra_checks(rng), _matrix_checks()):
        for c in group:
            push(c)
    for c in _invariant_checks(max_n, cache_dir=cache_dir):
        push(c)
    return results
