"""Shared helpers: small rings and seeded random polynomial generators."""

import random

import pytest

from detfsing import Polynomial, RingContext


def simple_ring(nvars, p, order="grevlex"):
    """A ring with variables x[1,1], x[1,2], ... for generic testing."""
    return RingContext([("x", 1, j + 1) for j in range(nvars)], p, order)


def random_poly(ring, rng, max_terms=5, max_exp=3):
    d = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        c = rng.randint(1, ring.p - 1) if ring.p > 2 else 1
        m = ring.monomial(exps)
        d[m] = (d.get(m, 0) + c) % ring.p
    return Polynomial(ring, {m: c for m, c in d.items() if c})


def random_nonzero_poly(ring, rng, max_terms=5, max_exp=3):
    while True:
        f = random_poly(ring, rng, max_terms, max_exp)
        if not f.is_zero():
            return f


@pytest.fixture
def rng():
    return random.Random(20240817)
