"""The command-line surface: formats, exit codes, determinism, streaming."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from linksgould import constants, lg_as
from linksgould.cli import main, to_latex
from linksgould.constants import lg_as1_reference
from linksgould.laurent import LaurentPoly


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("LG_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


class TestCompute:
    def test_n1_text_matches_reference(self, runner, cache_dir):
        result = runner.invoke(main, ["compute", "--n", "1"])
        assert result.exit_code == 0
        assert LaurentPoly.parse(result.output.strip()) == lg_as1_reference()

    def test_n1_json_has_expected_coefficient(self, runner, cache_dir):
        result = runner.invoke(main, ["compute", "--n", "1", "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert ["8", 2, 12] in doc["polynomial"]
        assert doc["n"] == 1
        assert doc["constants_checksum"] == constants.checksum()

    def test_n0_warns_extrapolation(self, runner, cache_dir):
        result = runner.invoke(main, ["compute", "--n", "0"])
        assert result.exit_code == 0
        assert "extrapolation" in result.stderr

    def test_negative_n_is_usage_error(self, runner, cache_dir):
        result = runner.invoke(main, ["compute", "--n", "-1"])
        assert result.exit_code == 2

    def test_output_deterministic(self, runner, cache_dir):
        first = runner.invoke(main, ["compute", "--n", "2", "--format", "json"])
        second = runner.invoke(main, ["compute", "--n", "2", "--format", "json"])
        assert first.output == second.output

    def test_no_cache_matches_cached(self, runner, cache_dir):
        cached = runner.invoke(main, ["compute", "--n", "2", "--format", "json"])
        fresh = runner.invoke(main, ["compute", "--n", "2", "--format", "json", "--no-cache"])
        assert cached.output == fresh.output

    def test_power_strategies_agree(self, runner, cache_dir):
        outputs = set()
        for strategy in ("binary", "sequential", "spectral"):
            r = runner.invoke(
                main,
                ["compute", "--n", "3", "--no-cache", "--power-strategy", strategy],
            )
            assert r.exit_code == 0
            outputs.add(r.output)
        assert len(outputs) == 1

    def test_latex_format_groups_bands(self, runner, cache_dir):
        result = runner.invoke(main, ["compute", "--n", "1", "--format", "latex"])
        assert result.exit_code == 0
        assert r"\left(s^{12} + q^{-12}s^{-12}\right)" in result.output


class TestLatexRendering:
    def test_grouped_roundtrip_structure(self, cache_dir):
        poly = lg_as(1, with_power_vector=False).polynomial
        rendered = to_latex(poly)
        assert rendered.count("\\left(s^{") == 6  # bands s^12 down to s^2

    def test_non_symmetric_falls_back_flat(self):
        assert to_latex(LaurentPoly.parse("q*s^2 + 3")) == "qs^{2} + 3"

    def test_zero(self):
        assert to_latex(LaurentPoly.parse("0")) == "0"


class TestAnalyze:
    def test_report_fields(self, runner, cache_dir):
        result = runner.invoke(main, ["analyze", "--n", "3"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["term_summary"]["leading"] == {"coeff": "256", "qexp": 6, "sexp": 28}
        assert doc["term_summary"]["s_span"] == 56
        assert doc["term_summary"]["matches_closed_form"] is True
        assert doc["genus_report"]["genus"] == 6
        assert doc["genus_report"]["one_minus_chi"] == 14


class TestExtract:
    def test_basis_column(self, runner):
        result = runner.invoke(main, ["extract", "0", "1", "q^2*s^2 - q^2 - 1 + s^-2"])
        assert result.exit_code == 0
        assert json.loads(result.output) == [[["1", 0, 0]], [], []]

    def test_inconsistent_triple(self, runner):
        result = runner.invoke(main, ["extract", "1", "1", "1"])
        assert result.exit_code == 1
        assert "inconsistent" in result.stderr

    def test_bad_polynomial_is_usage_error(self, runner):
        result = runner.invoke(main, ["extract", "spam", "1", "0"])
        assert result.exit_code == 2


class TestVerify:
    def test_passes(self, runner, cache_dir):
        result = runner.invoke(main, ["verify", "--max-n", "2"])
        assert result.exit_code == 0
        assert "checks passed" in result.output
        assert "FAIL" not in result.output

    def test_corrupted_constants_exit_1(self, runner, cache_dir, monkeypatch):
        real = constants._load_json

        def tampered(name):
            doc = real(name)
            if name == "constants.json":
                doc = json.loads(json.dumps(doc))
                doc["constants"]["bracket"]["A"][0][0] = "17"
            return doc

        monkeypatch.setattr(constants, "_load_json", tampered)
        constants._document.cache_clear()
        constants.checksum.cache_clear()
        try:
            result = runner.invoke(main, ["verify", "--max-n", "1"])
            assert result.exit_code == 1
            assert "checksum mismatch" in result.output
        finally:
            constants._document.cache_clear()
            constants.checksum.cache_clear()


class TestTableAndBaseline:
    def test_table_csv(self, runner, cache_dir, tmp_path):
        out = tmp_path / "table.csv"
        result = runner.invoke(main, ["table", "--from", "1", "--to", "3", "--out", str(out)])
        assert result.exit_code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "n,leading,trailing,span,genus,q1_check"
        assert lines[1] == "1,8*q^2*s^12,8*q^-10*s^-12,24,2,ok"
        assert lines[3] == "3,256*q^6*s^28,256*q^-22*s^-28,56,6,ok"

    def test_table_stable_under_cache_state(self, runner, cache_dir, tmp_path):
        cold = tmp_path / "cold.csv"
        warm = tmp_path / "warm.csv"
        runner.invoke(main, ["table", "--from", "1", "--to", "2", "--out", str(cold)])
        runner.invoke(main, ["table", "--from", "1", "--to", "2", "--out", str(warm)])
        assert cold.read_bytes() == warm.read_bytes()

    def test_table_bad_range(self, runner, cache_dir, tmp_path):
        result = runner.invoke(
            main, ["table", "--from", "5", "--to", "2", "--out", str(tmp_path / "x.csv")]
        )
        assert result.exit_code == 2

    def test_baseline_text(self, runner):
        result = runner.invoke(main, ["baseline"])
        assert result.exit_code == 0
        poly = LaurentPoly.parse(result.output.strip())
        assert poly.s_span() == 12
