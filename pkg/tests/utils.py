"""Shared test helpers: seeded generators of scalars, configurations and curves."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from qhc.moduli import Affine, Configuration, Mobius, Scaling, Space
from qhc.poly import INFINITY, GaussianRational, PointP1
from qhc.quasihom import NormalForm

# reaches past 10^6
WIDE_DENOMINATORS = (1, 2, 3, 7, 1_000_003, 3_000_017)

COPRIME_PAIRS = [(p, q) for q in range(1, 10) for p in range(1, q) if gcd(p, q) == 1]


def random_gaussian(
    rng: random.Random, bound: int = 6, denominators: tuple[int, ...] = (1, 2, 3)
) -> GaussianRational:
    """A Gaussian rational with small numerators and denominators."""
    re = Fraction(rng.randint(-bound, bound), rng.choice(denominators))
    im = Fraction(rng.randint(-bound, bound), rng.choice(denominators)) if rng.random() < 0.5 else 0
    return GaussianRational(re, im)


def random_nonzero(
    rng: random.Random, bound: int = 6, denominators: tuple[int, ...] = (1, 2, 3)
) -> GaussianRational:
    while True:
        value = random_gaussian(rng, bound, denominators)
        if not value.is_zero():
            return value


def random_distinct(
    rng: random.Random,
    count: int,
    *,
    nonzero: bool = False,
    bound: int = 6,
    denominators: tuple[int, ...] = (1, 2, 3),
) -> list[GaussianRational]:
    """``count`` pairwise distinct Gaussian rationals."""
    values: list[GaussianRational] = []
    while len(values) < count:
        if nonzero:
            value = random_nonzero(rng, bound, denominators)
        else:
            value = random_gaussian(rng, bound, denominators)
        if value not in values:
            values.append(value)
    return values


def random_configuration(rng: random.Random, space: Space, size: int) -> Configuration:
    """A configuration of ``size`` points; ``P1`` ones contain infinity half of the time."""
    if space is Space.P1 and size and rng.random() < 0.5:
        points: list[PointP1] = [INFINITY]
        points += [PointP1(v) for v in random_distinct(rng, size - 1)]
        return Configuration(space, tuple(points))
    values = random_distinct(rng, size, nonzero=space is Space.STAR)
    return Configuration(space, tuple(PointP1(v) for v in values))


def random_mobius(rng: random.Random) -> Mobius:
    while True:
        a, b, c, d = (random_gaussian(rng, 4, (1, 2)) for _ in range(4))
        if not (a * d - b * c).is_zero():
            return Mobius(a, b, c, d)


def random_affine(rng: random.Random) -> Affine:
    return Affine(random_nonzero(rng, 4), random_gaussian(rng, 4))


def random_scaling(rng: random.Random) -> Scaling:
    return Scaling(random_nonzero(rng, 4))


def random_normal_form(rng: random.Random, *, max_branches: int = 6) -> NormalForm:
    """A reduced-or-not decomposition with coprime ``p < q <= 9`` and distinct lambdas."""
    p, q = rng.choice(COPRIME_PAIRS)
    lambdas = random_distinct(
        rng, rng.randint(1, max_branches), nonzero=True, bound=3, denominators=WIDE_DENOMINATORS
    )
    return NormalForm(
        mu=random_nonzero(rng, 3),
        m=rng.randint(0, 2),
        n=rng.randint(0, 2),
        p=p,
        q=q,
        lambdas=tuple(lambdas),
    )


def decomposition(nf: NormalForm) -> tuple[object, ...]:
    """The fields that determine a decomposition, comparable with ``==``."""
    return (nf.mu, nf.m, nf.n, nf.p, nf.q, nf.lambdas, nf.swapped)
