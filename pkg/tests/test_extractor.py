"""Component recovery from partial traces: the 3x3 system, both directions."""

from __future__ import annotations

import pytest

from linksgould import (
    CC,
    LL,
    XX,
    InconsistentTraces,
    TraceTriple,
    bracket_constants,
    extract,
    forward_traces,
    system_matrix,
)
from linksgould.extractor import system_determinant
from linksgould.laurent import LaurentPoly, ONE, Q, ZERO

from conftest import random_vec

P = LaurentPoly.parse


def test_system_matrix_entries():
    bc = bracket_constants()
    m = system_matrix()
    assert m[0][2] == bc.A  # <a><a+1>/q
    assert m[2][0] == bc.B  # q<a><a+1>
    assert m[0][0] == ZERO and m[1][1] == ZERO and m[2][2] == ZERO


def test_determinant_closed_form():
    bc = bracket_constants()
    expected = bc.bra_alpha * bc.bra_alpha_plus_1 * (Q + Q**-1)
    assert system_determinant() == expected
    assert system_determinant().apply_involution() == system_determinant()
    assert system_determinant() != ZERO


@pytest.mark.parametrize(
    "column, vec",
    [
        ("ll", LL),
        ("cc", CC),
        ("xx", XX),
    ],
)
def test_basis_columns(column, vec):
    bc = bracket_constants()
    triples = {
        "ll": TraceTriple(ZERO, ONE, bc.B),
        "cc": TraceTriple(ONE, ZERO, ONE),
        "xx": TraceTriple(bc.A, ONE, ZERO),
    }
    assert extract(triples[column]) == vec
    assert forward_traces(vec) == triples[column]


def test_forward_traces_zero():
    zero_vec = CC - CC
    assert forward_traces(zero_vec) == TraceTriple(ZERO, ZERO, ZERO)


def test_roundtrip_random(rng):
    for _ in range(150):
        v = random_vec(rng)
        t = forward_traces(v)
        assert extract(t) == v
        assert forward_traces(extract(t)) == t


def test_extract_is_linear(rng):
    for _ in range(40):
        v1, v2 = random_vec(rng), random_vec(rng)
        t1, t2 = forward_traces(v1), forward_traces(v2)
        combined = TraceTriple(
            t1.tr_right + t2.tr_right,
            t1.tr_top + t2.tr_top,
            t1.tr_twisted_right + t2.tr_twisted_right,
        )
        assert extract(combined) == v1 + v2


def test_inconsistent_triple_raises():
    with pytest.raises(InconsistentTraces):
        extract(TraceTriple(ONE, ONE, ONE))
    with pytest.raises(InconsistentTraces):
        extract(TraceTriple(Q, ZERO, ZERO))
