"""The stored constants: integrity, spot values, and internal identities."""

from __future__ import annotations

import pytest

from linksgould import LaurentPoly, bracket_constants, checksum, tt_minus, tt_plus
from linksgould import constants
from linksgould.algebra import as_star_row, boxtimes
from linksgould.laurent import ONE, ZERO

T = LaurentPoly.term
P = LaurentPoly.parse


def fixed(p):
    return p.apply_involution() == p


def test_checksum_verifies():
    assert checksum().startswith("sha256:")


def test_bracket_values():
    bc = bracket_constants()
    assert bc.bra_alpha == P("s - s^-1")
    assert bc.bra_alpha_plus_1 == P("q*s - q^-1*s^-1")
    assert bc.A * T(1, 2, 0) == bc.B
    assert fixed(bc.A) and fixed(bc.B)


def test_trace_table_rows():
    bc = bracket_constants()
    rows = constants.trace_table()
    assert rows[0] == (ZERO, ONE, bc.A)
    assert rows[1] == (ONE, ZERO, ONE)
    assert rows[2] == (bc.B, ONE, ZERO)


def test_structure_table_symmetry_and_fixedness():
    table = constants.structure_table()
    for (i, j), vec in table.items():
        assert table[(j, i)] == vec
        assert all(fixed(p) for p in vec)


def test_tt_plus_spot_coefficients():
    # top band of the ll coordinate: (s^2 + q^-2 s^-2)(1 - 2 q^-2 + ...)
    ttp = tt_plus()
    assert ttp.ll.coefficient(qexp=0, sexp=2) == 1
    assert ttp.ll.coefficient(qexp=-2, sexp=2) == -2
    assert ttp.cc.coefficient(qexp=0, sexp=4) == 2
    assert ttp.xx.coefficient(qexp=-2, sexp=2) == 2


def test_tt_minus_spot_coefficients():
    # the negatively clasped vector carries the q^2 leading coefficients
    ttm = tt_minus()
    assert ttm.ll.coefficient(qexp=2, sexp=2) == 1
    assert ttm.cc.coefficient(qexp=2, sexp=4) == 2
    assert ttm.xx.coefficient(qexp=2, sexp=0) == -1


def test_component_vectors_involution_fixed():
    for vec in (tt_plus(), tt_minus()):
        assert vec.apply_involution() == vec


def test_as_star_values():
    as_ll, as_cc, as_xx = as_star_row()
    assert as_ll.coefficient(qexp=0, sexp=6) == 1
    assert as_ll.s_span() == 12
    assert as_xx.coefficient(qexp=0, sexp=6) == 3
    assert as_xx.coefficient(qexp=-2, sexp=6) == 1
    assert as_cc == (
        P("s^4 + q^-4*s^-4")
        - P("s^2 + q^-2*s^-2") * P("2 + 2*q^-2")
        + P("1 + 4*q^-2 + q^-4")
    )
    assert all(fixed(p) for p in (as_ll, as_cc, as_xx))


def test_truncation_seeds_match_leading_terms():
    (t_ll, t_cc, t_xx), (s_ll, s_cc, s_xx) = constants.truncation_seeds()
    assert (t_ll, t_cc, t_xx) == (T(4, 2, 6), T(4, 2, 8), T(8, 0, 6))
    assert (s_ll, s_cc, s_xx) == (T(1, 0, 6), T(1, 0, 4), T(3, 0, 6))

    def lead(p):
        smax = p.max_sexp()
        qmax = max(m.qexp for m in p.terms() if m.sexp == smax)
        return T(p.coefficient(qmax, smax), qmax, smax)

    prod = boxtimes(tt_plus(), tt_minus())
    assert [lead(c) for c in prod.coords()] == [t_ll, t_cc, t_xx]
    assert [lead(c) for c in as_star_row()] == [s_ll, s_cc, s_xx]


def test_matrix_spot_entries():
    cc = constants.matrix_entries("cc")
    # input x_2 (x) y_2, output x_0 (x) y_0
    assert cc[(10, 0)] == T(-1, -2, -2)
    assert (1, 0) not in cc  # off-diagonal inputs are killed
    xx = constants.matrix_entries("xx")
    assert xx[(3, 3)] == ONE  # x_0 y_3 -> x_0 y_3
    assert xx[(12, 12)] == ONE  # x_3 y_0 -> x_3 y_0
    ll = constants.matrix_entries("ll")
    assert all(ll[(m, m)] == ONE for m in range(16))
    assert len(ll) == 16


def test_unknown_matrix_name():
    with pytest.raises(ValueError):
        constants.matrix_entries("zz")


def test_reference_expansion_spot_terms():
    ref = constants.lg_as1_reference()
    assert ref.coefficient(qexp=2, sexp=12) == 8
    assert ref.coefficient(qexp=-20, sexp=12) == 12
    assert ref.coefficient(qexp=2, sexp=0) == 10
    assert ref.coefficient(qexp=0, sexp=0) == 261


def test_tampered_payload_fails_checksum(monkeypatch):
    import copy
    import json
    from importlib import resources

    path = resources.files("linksgould").joinpath("data", "constants.json")
    doc = json.loads(path.read_text())
    tampered = copy.deepcopy(doc)
    tampered["constants"]["bracket"]["A"][0][0] = "2"

    monkeypatch.setattr(
        constants, "_load_json", lambda name: tampered if name == "constants.json" else doc
    )
    constants._document.cache_clear()
    constants.checksum.cache_clear()
    try:
        with pytest.raises(constants.ConstantsIntegrityError):
            constants._document()
    finally:
        constants._document.cache_clear()
        constants.checksum.cache_clear()
