"""Seeded parameter samplers.

Exact constraints (a product equal to 1, a perfect-cube product) have measure
zero, so constrained samplers draw the free ratios and solve for the last one.
Each sample gets its own ``random.Random`` keyed by (seed, tag, index), which
makes a sample independent of how many others were drawn before it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .kernel import HPoint, point, signed_area
from .params import RatioParams

DEFAULT_BOUND = 20


def rng_for(seed: int, tag: str, index: int) -> random.Random:
    return random.Random(f"{seed}/{tag}/{index}")


def random_rational(rng: random.Random, bound: int = DEFAULT_BOUND) -> Fraction:
    """Positive rational with numerator and denominator uniform on 1..bound."""
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_ratios(rng, n: int, bound: int = DEFAULT_BOUND) -> list[Fraction]:
    return [random_rational(rng, bound) for _ in range(n)]


def random_triangle(rng, bound: int = DEFAULT_BOUND) -> tuple[HPoint, HPoint, HPoint]:
    """Non-degenerate triangle with signed rational coordinates."""
    while True:
        pts = [point(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                     Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
               for _ in range(3)]
        if signed_area(*pts) != 0:
            return tuple(pts)


def free_params(rng, bound=DEFAULT_BOUND) -> RatioParams:
    return RatioParams(*random_ratios(rng, 6, bound))


def ceva_lambdas(rng, bound=DEFAULT_BOUND) -> tuple[Fraction, Fraction, Fraction]:
    """lambda1, lambda2 free; lambda3 solved so the product is 1."""
    l1, l2 = random_ratios(rng, 2, bound)
    return l1, l2, 1 / (l1 * l2)


def ceva_uvw(rng, bound=DEFAULT_BOUND) -> tuple[Fraction, Fraction, Fraction]:
    u, v = random_ratios(rng, 2, bound)
    return u, v, 1 / (u * v)


def non_ceva_lambdas(rng, bound=DEFAULT_BOUND):
    while True:
        ls = random_ratios(rng, 3, bound)
        if ls[0] * ls[1] * ls[2] != 1:
            return tuple(ls)


def non_ceva_uvw(rng, bound=DEFAULT_BOUND):
    return non_ceva_lambdas(rng, bound)


def cube_product_params(rng, bound=DEFAULT_BOUND) -> RatioParams:
    """All six ratios with lambda1 lambda2 lambda3 u v w = c**3, c rational."""
    l1, l2, l3, u, v = random_ratios(rng, 5, bound)
    c = random_rational(rng, bound)
    return RatioParams(l1, l2, l3, u, v, c ** 3 / (l1 * l2 * l3 * u * v))


def unit_product_params(rng, bound=DEFAULT_BOUND) -> RatioParams:
    l1, l2, l3, u, v = random_ratios(rng, 5, bound)
    return RatioParams(l1, l2, l3, u, v, 1 / (l1 * l2 * l3 * u * v))


def cube_ceva_lambdas(rng, bound=DEFAULT_BOUND):
    """lambda product a perfect cube, so the equality witness is rational."""
    l1, l2 = random_ratios(rng, 2, bound)
    c = random_rational(rng, bound)
    return l1, l2, c ** 3 / (l1 * l2)
