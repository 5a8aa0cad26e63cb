"""Command-line surface: compute, analyze, extract, verify, table, baseline.

All artifact output goes to stdout; diagnostics go to stderr.  Identical
invocations produce byte-identical output.  Exit codes: 0 success,
1 verification or consistency failure, 2 usage error.
"""

from __future__ import annotations

import json
import threading
import shutil
import sys

import click

from . import analysis, constants
from .extractor import InconsistentTraces, TraceTriple, extract
from .laurent import LaurentPoly
from .pipeline import CACHE_ENV, LGResult, ResultCache, baseline_hh, lg_as
from .verify import run_checks

FORMATS = click.Choice(["text", "json", "latex"])
STRATEGIES = click.Choice(["auto", "binary", "sequential", "spectral"])


def _latex_term(coeff: int, qexp: int) -> str:
    mag = abs(coeff)
    body = "" if qexp == 0 else ("q" if qexp == 1 else "q^{%d}" % qexp)
    if mag != 1 or not body:
        body = str(mag) + body
    return body


def _latex_qpoly(pairs: list[tuple[int, int]]) -> str:
    parts = []
    for coeff, qexp in pairs:
        term = _latex_term(coeff, qexp)
        if not parts:
            parts.append(term if coeff > 0 else "-" + term)
        else:
            parts.append((" + " if coeff > 0 else " - ") + term)
    return "".join(parts)


def to_latex(p: LaurentPoly) -> str:
    """LaTeX rendering, grouped into bands (s^k + q^-k s^-k)(...q-poly...).

    The grouping pairs each term with its image under s -> q^-1 s^-1, which
    is lossless exactly when the polynomial is fixed by that symmetry (every
    invariant here is); other polynomials fall back to a flat term list.
    """
    if not p:
        return "0"
    if p.apply_involution() != p:
        flat = []
        for c, qe, se in p.terms():
            body = _latex_term(c, qe)
            if se:
                body += "s" if se == 1 else "s^{%d}" % se
            if not flat:
                flat.append(body if c > 0 else "-" + body)
            else:
                flat.append((" + " if c > 0 else " - ") + body)
        return "".join(flat)
    bands: dict[int, list[tuple[int, int]]] = {}
    for c, qe, se in p.terms():
        bands.setdefault(se, []).append((c, qe))
    parts = []
    for k in sorted((k for k in bands if k > 0), reverse=True):
        qpoly = _latex_qpoly([(c, qe) for c, qe in bands[k]])
        parts.append(
            "\\left(s^{%d} + q^{-%d}s^{-%d}\\right)\\left(%s\\right)" % (k, k, k, qpoly)
        )
    rendered = "\n + ".join(parts)
    if 0 in bands:
        tail = _latex_qpoly(bands[0])
        if not rendered:
            return tail
        if tail.startswith("-"):
            return rendered + "\n - " + tail[1:]
        return rendered + "\n + " + tail
    return rendered


def _emit_result(result: LGResult, fmt: str) -> None:
    out = sys.stdout
    if fmt == "text":
        out.write(result.polynomial.to_text())
        out.write("\n")
    elif fmt == "latex":
        out.write(to_latex(result.polynomial))
        out.write("\n")
    else:
        sys.stdout.buffer.write(result.document_bytes())
        sys.stdout.buffer.write(b"\n")
    out.flush()


@click.group()
def main():
    """Exact Links-Gould invariants of the Allen-Swenberg link family."""


@main.command()
@click.option("--n", required=True, type=click.IntRange(min=0), help="link index (0 = unit extrapolation)")
@click.option("--format", "fmt", default="text", type=FORMATS, show_default=True)
@click.option("--no-cache", is_flag=True, help="compute fresh, do not touch the cache")
@click.option("--power-strategy", default="auto", type=STRATEGIES, show_default=True)
@click.option("--cache-dir", default=None, type=click.Path(), help=f"cache directory (else ${CACHE_ENV} or the user cache)")
def compute(n: int, fmt: str, no_cache: bool, power_strategy: str, cache_dir):
    """Print the invariant polynomial of AS(n)."""
    cache = None if no_cache else ResultCache(cache_dir)
    if n == 0:
        click.echo(
            "warning: n = 0 is an extrapolation (unit of the concatenation product), not an AS link",
            err=True,
        )
    if cache is not None and fmt == "json":
        # Warm hit: the cache file IS the output document; stream it.
        raw = cache.open_raw(n, constants.checksum())
        if raw is not None:
            with raw:
                shutil.copyfileobj(raw, sys.stdout.buffer, 1 << 20)
            sys.stdout.buffer.write(b"\n")
            sys.stdout.flush()
            return
        # Cold JSON run: compute, then overlap the cache write with stdout.
        result = lg_as(
            n,
            power_strategy=power_strategy,
            use_cache=False,
            with_power_vector=False,
        )
        doc = result.document_bytes()
        writer = threading.Thread(target=cache.store, args=(result,))
        writer.start()
        sys.stdout.buffer.write(doc)
        sys.stdout.buffer.write(b"\n")
        sys.stdout.flush()
        writer.join()
        return
    result = lg_as(
        n,
        power_strategy=power_strategy,
        use_cache=not no_cache,
        cache_dir=cache_dir,
        with_power_vector=False,
    )
    _emit_result(result, fmt)


@main.command()
@click.option("--n", required=True, type=click.IntRange(min=1))
@click.option("--no-cache", is_flag=True)
@click.option("--cache-dir", default=None, type=click.Path())
def analyze(n: int, no_cache: bool, cache_dir):
    """Extremal-term summary and genus report for AS(n), as JSON."""
    result = lg_as(n, use_cache=not no_cache, cache_dir=cache_dir, with_power_vector=False)
    summary = analysis.summarize(result.polynomial)
    report = analysis.genus(n, summary.s_span)
    lead, trail, span = analysis.predicted_extremes(n)
    doc = {
        "n": n,
        "term_summary": {
            "leading": {"coeff": str(summary.leading.coeff), "qexp": summary.leading.qexp, "sexp": summary.leading.sexp},
            "trailing": {"coeff": str(summary.trailing.coeff), "qexp": summary.trailing.qexp, "sexp": summary.trailing.sexp},
            "s_span": summary.s_span,
            "matches_closed_form": summary.leading == lead and summary.trailing == trail and summary.s_span == span,
        },
        "genus_report": {
            "mu": report.mu,
            "span_lower_bound_quantity": report.span_lower_bound_quantity,
            "seifert_disks": report.seifert_disks,
            "seifert_handles": report.seifert_handles,
            "one_minus_chi": report.one_minus_chi,
            "genus": report.genus,
        },
    }
    click.echo(json.dumps(doc, sort_keys=True, separators=(",", ":")))


@main.command("extract")
@click.argument("tr_right")
@click.argument("tr_top")
@click.argument("tr_twisted_right")
def extract_cmd(tr_right: str, tr_top: str, tr_twisted_right: str):
    """Recover (ll, cc, xx) components from three partial-trace scalars.

    Arguments are polynomials in canonical text form, e.g. 'q*s^2 - 1'.
    """
    try:
        triple = TraceTriple(
            LaurentPoly.parse(tr_right),
            LaurentPoly.parse(tr_top),
            LaurentPoly.parse(tr_twisted_right),
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    try:
        vec = extract(triple)
    except InconsistentTraces as exc:
        click.echo(f"inconsistent traces: {exc}", err=True)
        sys.exit(1)
    click.echo(json.dumps(vec.to_triples(), separators=(",", ":")))


@main.command()
@click.option("--max-n", default=10, type=click.IntRange(min=1), show_default=True)
@click.option("--cache-dir", default=None, type=click.Path())
def verify(max_n: int, cache_dir):
    """Re-check every stored constant and derived fact up to max-n."""
    failures = 0

    def emit(check):
        nonlocal failures
        status = "ok  " if check.ok else "FAIL"
        detail = f"  ({check.detail})" if check.detail else ""
        click.echo(f"{status}  {check.name}{detail}")
        if not check.ok:
            failures += 1

    try:
        checks = run_checks(max_n=max_n, cache_dir=cache_dir, emit=emit)
    except constants.ConstantsIntegrityError as exc:
        click.echo(f"FAIL  constants integrity: {exc}", err=True)
        sys.exit(1)
    click.echo(f"{len(checks) - failures}/{len(checks)} checks passed")
    sys.exit(1 if failures else 0)


@main.command()
@click.option("--from", "start", default=1, type=click.IntRange(min=1), show_default=True)
@click.option("--to", "stop", required=True, type=click.IntRange(min=1))
@click.option("--out", required=True, type=click.Path(writable=True))
@click.option("--no-cache", is_flag=True)
@click.option("--cache-dir", default=None, type=click.Path())
def table(start: int, stop: int, out: str, no_cache: bool, cache_dir):
    """Write a CSV of (n, leading, trailing, span, genus, q1_check)."""
    if stop < start:
        raise click.UsageError("--to must be at least --from")
    rows = ["n,leading,trailing,span,genus,q1_check"]
    for n in range(start, stop + 1):
        result = lg_as(n, use_cache=not no_cache, cache_dir=cache_dir, with_power_vector=False)
        summary = analysis.summarize(result.polynomial)
        report = analysis.genus(n, summary.s_span)
        q1_ok = result.polynomial.substitute_q1() == LaurentPoly.from_terms(
            [(1, 0, 4), (-4, 0, 2), (6, 0, 0), (-4, 0, -2), (1, 0, -4)]
        )
        lead = LaurentPoly.term(*summary.leading).to_text()
        trail = LaurentPoly.term(*summary.trailing).to_text()
        rows.append(
            f"{n},{lead},{trail},{summary.s_span},{report.genus},{'ok' if q1_ok else 'MISMATCH'}"
        )
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(rows) + "\n")
    click.echo(f"wrote {out} ({stop - start + 1} rows)", err=True)


@main.command()
@click.option("--format", "fmt", default="text", type=FORMATS, show_default=True)
def baseline(fmt: str):
    """Print the unlinked-skies baseline invariant (two skies, no clasp)."""
    poly = baseline_hh()
    if fmt == "text":
        click.echo(poly.to_text())
    elif fmt == "latex":
        click.echo(to_latex(poly))
    else:
        click.echo(json.dumps(poly.to_triples(), separators=(",", ":")))


if __name__ == "__main__":
    main()
