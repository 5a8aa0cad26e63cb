"""Authoritative store of the fixed polynomial data driving every computation.

Everything numeric about the basis calculus lives in one machine-readable
file, ``data/constants.json``: the bracket combinations, the partial-trace
table, the horizontal-concatenation structure constants, the clasped-cabling
component vectors TT+/TT-, the closure pairing row AS*, the three 16x16
endomorphism matrices, and the leading-order truncation seeds.  Code never
re-types any of those expressions; a transcription error is therefore caught
in exactly one place by the verification suite.

The file carries a sha256 checksum over its payload.  It is verified on
first load and the digest is exposed via :func:`checksum` so downstream
caches can key on it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .laurent import LaurentPoly

__all__ = [
    "BracketConstants",
    "ConstantsIntegrityError",
    "BASIS",
    "bracket_constants",
    "checksum",
    "trace_table",
    "structure_table",
    "tt_plus_raw",
    "tt_minus_raw",
    "as_star_raw",
    "matrix_entries",
    "truncation_seeds",
    "lg_as1_reference",
]

#: Fixed coordinate order of the endomorphism basis.
BASIS = ("ll", "cc", "xx")


class ConstantsIntegrityError(RuntimeError):
    """The constants file failed its checksum or is structurally invalid."""


@dataclass(frozen=True)
class BracketConstants:
    """The bracket combinations entering the trace system and the product table.

    ``bra_alpha = s - s^-1`` and ``bra_alpha_plus_1 = q*s - q^-1*s^-1``;
    ``A`` is their product divided by q and ``B`` is it multiplied by q,
    so ``A * q^2 == B``.
    """

    bra_alpha: LaurentPoly
    bra_alpha_plus_1: LaurentPoly
    A: LaurentPoly
    B: LaurentPoly


def _load_json(name: str) -> dict:
    path = resources.files("linksgould").joinpath("data", name)
    with path.open("r", encoding="utf-8") as fh:
        return json.load(fh)


@lru_cache(maxsize=1)
def _document() -> dict:
    doc = _load_json("constants.json")
    try:
        stated = doc["checksum"]
        payload = doc["constants"]
    except KeyError as exc:
        raise ConstantsIntegrityError(f"constants file missing field {exc}") from exc
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    digest = "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()
    if digest != stated:
        raise ConstantsIntegrityError(
            f"constants checksum mismatch: file says {stated}, payload hashes to {digest}"
        )
    return doc


@lru_cache(maxsize=1)
def checksum() -> str:
    """Verified sha256 digest of the constants payload (``sha256:...``)."""
    return _document()["checksum"]


def _poly(triples) -> LaurentPoly:
    return LaurentPoly.from_triples(triples)


def _vec3(obj: dict) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    return tuple(_poly(obj[name]) for name in BASIS)


@lru_cache(maxsize=1)
def bracket_constants() -> BracketConstants:
    b = _document()["constants"]["bracket"]
    return BracketConstants(
        bra_alpha=_poly(b["alpha"]),
        bra_alpha_plus_1=_poly(b["alpha_plus_1"]),
        A=_poly(b["A"]),
        B=_poly(b["B"]),
    )


@lru_cache(maxsize=1)
def trace_table() -> tuple[tuple[LaurentPoly, ...], ...]:
    """3x3 table: rows (right, top, twisted-right trace), columns (ll, cc, xx).

    Read columnwise this is the matrix of the component-recovery system.
    """
    t = _document()["constants"]["trace_table"]
    return tuple(tuple(_poly(p) for p in row) for row in t["entries"])


@lru_cache(maxsize=1)
def structure_table() -> dict[tuple[str, str], tuple[LaurentPoly, ...]]:
    """Components of the horizontal concatenation of two basis tangles."""
    raw = _document()["constants"]["boxtimes_table"]
    table = {}
    for key, vec in raw.items():
        i, j = key.split(",")
        table[(i, j)] = tuple(_poly(p) for p in vec)
    return table


@lru_cache(maxsize=1)
def tt_plus_raw() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    return _vec3(_document()["constants"]["tt_plus"])


@lru_cache(maxsize=1)
def tt_minus_raw() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    return _vec3(_document()["constants"]["tt_minus"])


@lru_cache(maxsize=1)
def as_star_raw() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    return _vec3(_document()["constants"]["as_star"])


@lru_cache(maxsize=3)
def matrix_entries(name: str) -> dict[tuple[int, int], LaurentPoly]:
    """Sparse entries of a 16x16 matrix: (input index, output index) -> poly.

    ``name`` is one of ``"ll"``, ``"cc"``, ``"xx"``.  Indices flatten the
    basis vector x_i (x) y_j to 4*i + j.
    """
    if name not in BASIS:
        raise ValueError(f"unknown matrix {name!r}")
    raw = _document()["constants"][f"{name}_matrix"]
    return {(m, o): _poly(p) for m, o, p in raw}


@lru_cache(maxsize=1)
def truncation_seeds() -> tuple[tuple[LaurentPoly, ...], tuple[LaurentPoly, ...]]:
    """Leading-monomial seeds (T, S) of the extremal-term recursion.

    T holds, per coordinate, the leading term of the concatenated clasped
    cablings; S holds the leading terms of the AS* pairing row.
    """
    raw = _document()["constants"]["leading_truncations"]
    t = tuple(_poly(raw["T"][name]) for name in BASIS)
    s = tuple(_poly(p) for p in raw["S"])
    return t, s


@lru_cache(maxsize=1)
def lg_as1_reference() -> LaurentPoly:
    """Independently transcribed expansion of LG_AS(1), for bit-exact checks."""
    return _poly(_load_json("lg_as1_reference.json")["polynomial"])
