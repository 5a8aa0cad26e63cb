"""Extremal terms, closed forms, the recursion oracle, and genus reports."""

from __future__ import annotations

import pytest

from linksgould import (
    Monomial,
    ZeroPolynomial,
    asymptotic_oracle,
    genus,
    lg_as,
    predicted_extremes,
    summarize,
)
from linksgould.algebra import as_star_row
from linksgould.laurent import LaurentPoly, S, ZERO

P = LaurentPoly.parse


class TestSummarize:
    def test_first_invariant(self, tmp_path):
        summary = summarize(lg_as(1, cache_dir=tmp_path).polynomial)
        assert summary.leading == Monomial(8, 2, 12)
        assert summary.trailing == Monomial(8, -10, -12)
        assert summary.s_span == 24

    def test_simple_difference(self):
        summary = summarize(S - S**-1)
        assert summary.leading == Monomial(1, 0, 1)
        assert summary.trailing == Monomial(-1, 0, -1)
        assert summary.s_span == 2

    def test_baseline_row(self):
        summary = summarize(as_star_row()[0])
        assert summary.leading == Monomial(1, 0, 6)
        assert summary.trailing == Monomial(1, -6, -6)
        assert summary.s_span == 12

    def test_max_q_tiebreak_within_band(self):
        p = P("3*q^2*s^4 + 5*q^-7*s^4 - 2*s^-1")
        summary = summarize(p)
        assert summary.leading == Monomial(3, 2, 4)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            summarize(ZERO)


class TestPredictedExtremes:
    @pytest.mark.parametrize(
        "n, coeff, qlead",
        [(1, 8, 2), (3, 256, 6), (5, 6144, 10)],
    )
    def test_closed_form(self, n, coeff, qlead):
        lead, trail, span = predicted_extremes(n)
        assert lead == Monomial(coeff, qlead, 4 + 8 * n)
        assert trail == Monomial(coeff, -4 - 6 * n, -4 - 8 * n)
        assert span == 4 * (4 * n + 2)

    def test_trailing_is_involution_image_of_leading_monomial(self):
        for n in (1, 2, 9):
            lead, trail, _ = predicted_extremes(n)
            mirrored = LaurentPoly.term(*lead).apply_involution()
            # same s-exponent; the q-exponent of the image bounds the band
            assert trail.sexp == -lead.sexp
            assert mirrored == LaurentPoly.term(lead.coeff, lead.qexp - lead.sexp, -lead.sexp)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            predicted_extremes(0)


class TestOracle:
    def test_first_values(self):
        assert asymptotic_oracle(1) == Monomial(8, 2, 12)
        assert asymptotic_oracle(2) == Monomial(48, 4, 20)

    def test_matches_closed_form_up_to_1000(self):
        for n in range(1, 1001):
            assert asymptotic_oracle(n) == predicted_extremes(n)[0]


class TestGenus:
    def test_first_surface(self):
        report = genus(1)
        assert (report.seifert_disks, report.seifert_handles) == (6, 11)
        assert report.one_minus_chi == 6
        assert report.genus == 2
        assert report.mu == 3

    def test_increment_rule(self):
        report = genus(2)
        assert (report.seifert_disks, report.seifert_handles) == (8, 17)
        assert report.one_minus_chi == 10
        assert report.genus == 4

    def test_linear_growth(self):
        for n in range(1, 101):
            report = genus(n)
            assert report.genus == 2 * n
            assert report.one_minus_chi == 4 * n + 2
            assert report.span_lower_bound_quantity == 4 * n + 2

    def test_lower_bound_from_computed_span(self):
        report = genus(3, computed_span=4 * 14)
        assert report.span_lower_bound_quantity == 14
        assert report.genus == 6

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            genus(0)
