"""Shared fixtures: deterministic random generators and value factories."""

from __future__ import annotations

import random

import pytest

from linksgould import EndoVec, LaurentPoly


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xA5A5)


def random_poly(
    rng: random.Random,
    max_terms: int = 8,
    coeff_max: int = 50,
    exp_max: int = 8,
    allow_zero: bool = True,
) -> LaurentPoly:
    n = rng.randint(0 if allow_zero else 1, max_terms)
    return LaurentPoly.from_terms(
        (
            rng.randint(-coeff_max, coeff_max),
            rng.randint(-exp_max, exp_max),
            rng.randint(-exp_max, exp_max),
        )
        for _ in range(n)
    )


def random_nonzero_poly(rng: random.Random, **kw) -> LaurentPoly:
    while True:
        p = random_poly(rng, allow_zero=False, **kw)
        if p:
            return p


def random_vec(rng: random.Random, max_terms: int = 4, exp_max: int = 5) -> EndoVec:
    return EndoVec(
        random_poly(rng, max_terms=max_terms, exp_max=exp_max),
        random_poly(rng, max_terms=max_terms, exp_max=exp_max),
        random_poly(rng, max_terms=max_terms, exp_max=exp_max),
    )
