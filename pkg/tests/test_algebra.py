"""The concatenation product: table cases, axioms, powers, pairing."""

from __future__ import annotations

import pytest

from linksgould import CC, LL, XX, EndoVec, boxtimes, boxtimes_pow, pair_as_star
from linksgould import bracket_constants
from linksgould.algebra import as_star_row
from linksgould.laurent import LaurentPoly, ZERO

from conftest import random_vec

ZV = EndoVec(ZERO, ZERO, ZERO)


class TestTableCases:
    def test_ll_ll_is_zero(self):
        assert boxtimes(LL, LL) == ZV

    def test_cc_xx_is_xx(self):
        assert boxtimes(CC, XX) == XX
        assert boxtimes(XX, CC) == XX

    def test_ll_xx_is_a_scaled_ll(self):
        a = bracket_constants().A
        assert boxtimes(LL, XX) == EndoVec(a, ZERO, ZERO)

    def test_ll_cc_is_ll(self):
        assert boxtimes(LL, CC) == LL

    def test_xx_xx_closed_form(self):
        p = LaurentPoly.parse
        sym2 = p("s^2 + q^-2*s^-2")
        sym4 = p("s^4 + q^-4*s^-4")
        expected = EndoVec(
            sym2 * p("1 + q^-2") - p("3*q^-2 + q^-4"),
            -sym4 + sym2 * p("3 + q^-2") - p("2 + 4*q^-2"),
            2 * sym2 - p("3 + q^-2"),
        )
        assert boxtimes(XX, XX) == expected


class TestAxioms:
    def test_unit(self, rng):
        for _ in range(60):
            f = random_vec(rng)
            assert boxtimes(CC, f) == f
            assert boxtimes(f, CC) == f

    def test_commutative(self, rng):
        for _ in range(120):
            f, g = random_vec(rng), random_vec(rng)
            assert boxtimes(f, g) == boxtimes(g, f)

    def test_associative(self, rng):
        for _ in range(60):
            f, g, h = random_vec(rng), random_vec(rng), random_vec(rng)
            assert boxtimes(boxtimes(f, g), h) == boxtimes(f, boxtimes(g, h))

    def test_bilinear(self, rng):
        for _ in range(40):
            f, g, h = random_vec(rng), random_vec(rng), random_vec(rng)
            assert boxtimes(f + g, h) == boxtimes(f, h) + boxtimes(g, h)

    def test_involution_equivariant(self, rng):
        for _ in range(60):
            f, g = random_vec(rng), random_vec(rng)
            left = boxtimes(f, g).apply_involution()
            right = boxtimes(f.apply_involution(), g.apply_involution())
            assert left == right


class TestPowers:
    def test_power_one(self, rng):
        f = random_vec(rng)
        assert boxtimes_pow(f, 1) == f

    def test_unit_power_idempotent(self):
        for k in range(5):
            assert boxtimes_pow(CC, k) == CC

    def test_power_zero_is_unit(self, rng):
        assert boxtimes_pow(random_vec(rng), 0) == CC

    def test_square_matches_product(self, rng):
        for _ in range(30):
            f = random_vec(rng)
            assert boxtimes_pow(f, 2) == boxtimes(f, f)

    @pytest.mark.parametrize("n", [3, 4, 5, 7])
    def test_binary_equals_sequential(self, rng, n):
        f = random_vec(rng, max_terms=2, exp_max=2)
        assert boxtimes_pow(f, n, "binary") == boxtimes_pow(f, n, "sequential")

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            boxtimes_pow(CC, -1)

    def test_unknown_strategy_rejected(self):
        with pytest.raises(ValueError):
            boxtimes_pow(CC, 2, "fibonacci")


class TestPairing:
    def test_basis_values(self):
        as_ll, as_cc, as_xx = as_star_row()
        assert pair_as_star(LL) == as_ll
        assert pair_as_star(CC) == as_cc
        assert pair_as_star(XX) == as_xx

    def test_zero(self):
        assert pair_as_star(ZV) == ZERO

    def test_linearity(self, rng):
        assert pair_as_star(LL + CC) == pair_as_star(LL) + pair_as_star(CC)
        for _ in range(40):
            f, g = random_vec(rng), random_vec(rng)
            assert pair_as_star(f + g) == pair_as_star(f) + pair_as_star(g)


class TestSerialization:
    def test_triples_roundtrip(self, rng):
        f = random_vec(rng)
        assert EndoVec.from_triples(f.to_triples()) == f

    def test_order_is_ll_cc_xx(self):
        triples = XX.to_triples()
        assert triples[0] == [] and triples[1] == [] and triples[2] == [["1", 0, 0]]
