import random
from fractions import Fraction

import pytest

from qclifford.scalars import (
    GaussRational,
    HalfLaurent,
    LaurentFrac,
    RadicalScalar,
    q_plus_qinv,
    qvar,
    sqrt,
)


def random_gauss(rng: random.Random, complex_ok: bool = True) -> GaussRational:
    re = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
    im = Fraction(0)
    if complex_ok and rng.random() < 0.3:
        im = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
    return GaussRational(re, im)


def random_halflaurent(rng: random.Random, max_terms: int = 3) -> HalfLaurent:
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        coeffs[rng.randint(-4, 4)] = random_gauss(rng)
    return HalfLaurent(coeffs)


def random_fraction_scalar(rng: random.Random) -> RadicalScalar:
    num = random_halflaurent(rng)
    if rng.random() < 0.3:
        den = HalfLaurent({0: GaussRational(1), 2: random_gauss(rng)})
        if den.is_zero() or len(den.coeffs) < 2:
            den = HalfLaurent({0: GaussRational(1)})
        return RadicalScalar.from_frac(LaurentFrac(num, den))
    return RadicalScalar.from_frac(LaurentFrac(num))


_RADICAL_POOL = None


def radical_pool():
    global _RADICAL_POOL
    if _RADICAL_POOL is None:
        q = qvar()
        Q = q_plus_qinv()
        _RADICAL_POOL = (
            RadicalScalar.one(),
            sqrt(Q),
            sqrt(q * Q),
            sqrt(RadicalScalar.constant(2)),
            sqrt(RadicalScalar.constant(Fraction(3, 5))),
        )
    return _RADICAL_POOL


def random_scalar(rng: random.Random) -> RadicalScalar:
    """Sum of up to three radical-weighted fraction terms."""
    out = RadicalScalar.zero()
    pool = radical_pool()
    for _ in range(rng.randint(1, 3)):
        out = out + random_fraction_scalar(rng) * pool[rng.randrange(len(pool))]
    return out


def random_light_scalar(rng: random.Random) -> RadicalScalar:
    """Small Laurent polynomial, sometimes radical-weighted; cheap to combine."""
    base = RadicalScalar.from_frac(
        LaurentFrac(HalfLaurent({rng.randint(-2, 2): random_gauss(rng, complex_ok=False)}))
    )
    if rng.random() < 0.3:
        pool = radical_pool()
        base = base * pool[rng.randrange(1, len(pool))]
    if rng.random() < 0.3:
        base = base + RadicalScalar.constant(rng.randint(-2, 2))
    return base


@pytest.fixture
def rng():
    return random.Random(20240814)
