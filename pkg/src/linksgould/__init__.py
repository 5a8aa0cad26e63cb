"""Exact Links-Gould invariants of the Allen-Swenberg link family.

The library computes, in exact integer arithmetic, the two-variable
Links-Gould polynomial LG_AS(n) of every Allen-Swenberg link, verifies its
closed-form extremal terms and the resulting Seifert genus, and exposes the
underlying endomorphism-basis calculus (partial-trace component extraction
and horizontal tangle concatenation) as reusable pieces.

Entry points:

* :func:`lg_as` - the invariant of AS(n), with a persistent result cache;
* :func:`baseline_hh` / :func:`distinguishes` - comparison against the
  causally-unrelated configuration (connected sum of two Hopf links);
* :mod:`linksgould.laurent` - the exact sparse Laurent polynomial ring;
* :mod:`linksgould.algebra` - the (ll, cc, xx) basis algebra and boxtimes;
* :mod:`linksgould.extractor` - trace-triple component recovery;
* :mod:`linksgould.analysis` - extremal terms, span, and genus reports;
* :mod:`linksgould.matrices` - the explicit 16x16 matrix checks.

The command-line tool ``lg`` fronts the same functionality.
"""

from .laurent import (
    LaurentPoly,
    Monomial,
    NotDivisible,
    ZeroPolynomial,
    ZeroSubstitution,
)
from .algebra import (
    CC,
    LL,
    XX,
    EndoVec,
    as_star_row,
    boxtimes,
    boxtimes_pow,
    pair_as_star,
    tt_plus,
    tt_minus,
)
from .analysis import (
    GenusReport,
    TermSummary,
    asymptotic_oracle,
    genus,
    predicted_extremes,
    summarize,
)
from .constants import BracketConstants, ConstantsIntegrityError, bracket_constants, checksum
from .extractor import (
    InconsistentTraces,
    TraceTriple,
    extract,
    forward_traces,
    system_matrix,
)
from .matrices import EndoMatrix, cc_matrix, compose, independence_check, ll_matrix, xx_matrix
from .pipeline import LGResult, ResultCache, baseline_hh, distinguishes, lg_as

__version__ = "1.0.0"

__all__ = [
    "LaurentPoly",
    "Monomial",
    "NotDivisible",
    "ZeroPolynomial",
    "ZeroSubstitution",
    "EndoVec",
    "LL",
    "CC",
    "XX",
    "boxtimes",
    "boxtimes_pow",
    "pair_as_star",
    "tt_plus",
    "tt_minus",
    "as_star_row",
    "TraceTriple",
    "InconsistentTraces",
    "extract",
    "forward_traces",
    "system_matrix",
    "TermSummary",
    "GenusReport",
    "summarize",
    "predicted_extremes",
    "asymptotic_oracle",
    "genus",
    "EndoMatrix",
    "ll_matrix",
    "cc_matrix",
    "xx_matrix",
    "compose",
    "independence_check",
    "LGResult",
    "ResultCache",
    "lg_as",
    "baseline_hh",
    "distinguishes",
    "BracketConstants",
    "ConstantsIntegrityError",
    "bracket_constants",
    "checksum",
    "__version__",
]
