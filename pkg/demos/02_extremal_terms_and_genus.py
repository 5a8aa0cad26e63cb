#!/usr/bin/env python3
# The closed forms: leading term (n+1) 4^n q^(2n) s^(4+8n), trailing term
# (n+1) 4^n q^(-4-6n) s^(-4-8n), s-span 4(4n+2) -- and the genus they force.

from linksgould import asymptotic_oracle, genus, lg_as, predicted_extremes, summarize

print(f"{'n':>3} {'leading':>22} {'trailing':>24} {'span':>5} {'genus':>5}")
for n in range(1, 9):
    poly = lg_as(n, use_cache=False, with_power_vector=False).polynomial
    summary = summarize(poly)
    lead, trail, span = predicted_extremes(n)

    # computed extremes match the closed forms exactly
    assert summary.leading == lead
    assert summary.trailing == trail
    assert summary.s_span == span

    # and an independent oracle re-derives the leading term by running the
    # truncated two-term recursion instead of the closed form
    assert asymptotic_oracle(n) == lead

    report = genus(n, computed_span=summary.s_span)
    c, qe, se = summary.leading
    lead_txt = f"{c}*q^{qe}*s^{se}"
    c, qe, se = summary.trailing
    trail_txt = f"{c}*q^{qe}*s^{se}"
    print(f"{n:>3} {lead_txt:>22} {trail_txt:>24} {summary.s_span:>5} {report.genus:>5}")

# The span inequality span <= 4(2g + mu - 1) meets the disk-band surface
# count 1 - chi = 4n + 2 exactly, so the genus is pinned to 2n.
report = genus(3)
print(
    f"\nn=3 surface: {report.seifert_disks} disks, {report.seifert_handles} handles,"
    f" 1 - chi = {report.one_minus_chi}, genus = {report.genus}"
)
