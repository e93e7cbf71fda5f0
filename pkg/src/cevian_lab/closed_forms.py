"""Scalar area-ratio formulas, independent of any coordinates.

Everything here is exact: rationals in, rationals out, except the Hölder
bound, which involves a cube root and is returned as a :class:`CertifiedReal`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .certified import CertifiedReal, Surd, exact_cbrt
from .errors import CevaViolation, DegenerateG, DegenerateH, NonPositiveRatio
from .params import RatioParams


def _positive(*xs) -> tuple[Fraction, ...]:
    out = tuple(Fraction(x) for x in xs)
    for x in out:
        if x <= 0:
            raise NonPositiveRatio(f"ratio must be positive, got {x}")
    return out


def routh_denominator(l1, l2, l3) -> Fraction:
    """(l1 l2 + l1 + 1)(l2 l3 + l2 + 1)(l3 l1 + l3 + 1)"""
    return (l1 * l2 + l1 + 1) * (l2 * l3 + l2 + 1) * (l3 * l1 + l3 + 1)


def routh_ratio(l1, l2, l3) -> Fraction:
    """Area of the triangle bounded by the three cevians over Area(ABC)."""
    l1, l2, l3 = _positive(l1, l2, l3)
    return (l1 * l2 * l3 - 1) ** 2 / routh_denominator(l1, l2, l3)


def def_ratio(l1, l2, l3) -> Fraction:
    """Area(DEF) / Area(ABC)."""
    l1, l2, l3 = _positive(l1, l2, l3)
    return (l1 * l2 * l3 + 1) / ((l1 + 1) * (l2 + 1) * (l3 + 1))


@dataclass(frozen=True)
class DerivedRatios:
    """Division ratios |FN|/|NE|, |DQ|/|QF|, |EP|/|PD| inside triangle DEF."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        _positive(self.alpha, self.beta, self.gamma)

    @property
    def product(self) -> Fraction:
        return self.alpha * self.beta * self.gamma

    def holder_factors(self) -> tuple[Fraction, Fraction, Fraction]:
        a, b, g = self.alpha, self.beta, self.gamma
        return a * g + a + 1, b * a + b + 1, g * b + g + 1


def derived_ratios(params: RatioParams) -> DerivedRatios:
    l1, l2, l3 = params.lambdas
    u, v, w = params.uvw
    return DerivedRatios(
        u * l3 * (1 + l2) / (1 + l3),
        v * l1 * (1 + l3) / (1 + l1),
        w * l2 * (1 + l1) / (1 + l2),
    )


def rst_def_ratio(params: RatioParams) -> Fraction:
    """Area(RST) / Area(DEF): the cevian-triangle formula applied inside DEF.

    Traversing DEF as D, F, E puts N, P, Q at ratios alpha, gamma, beta, which
    is why the factors pair up as (alpha gamma + alpha + 1) and so on.
    """
    d = derived_ratios(params)
    f1, f2, f3 = d.holder_factors()
    return (d.product - 1) ** 2 / (f1 * f2 * f3)


def _holder_cube(product) -> tuple[Surd, Surd]:
    """(t, (t**2 + t + 1)**3) for t = product**(1/3)."""
    t = Surd.root(product)
    return t, (t * t + t + 1) ** 3


def holder_bound_rhs(product) -> CertifiedReal:
    """(s - 1)**2 / (t**2 + t + 1)**3 with s = product and t = s**(1/3)."""
    (s,) = _positive(product)
    _, cube = _holder_cube(s)
    return CertifiedReal.of(Surd.const((s - 1) ** 2, s), cube)


def holder_three_term_gap(d: DerivedRatios) -> CertifiedReal:
    """Product of the three factors minus its Hölder lower bound; zero iff alpha = beta = gamma."""
    f1, f2, f3 = d.holder_factors()
    _, cube = _holder_cube(d.product)
    return CertifiedReal.of(f1 * f2 * f3 - cube)


def h_triangle_ratio(u, v, w) -> Fraction:
    """Area(H1H2H3) / Area(ABC)."""
    return routh_ratio(u, v, w)


def rst_over_h_ratio(params: RatioParams) -> Fraction:
    """Area(RST) / Area(H1H2H3) when AD, BE, CF are concurrent."""
    if params.lambda_product != 1:
        raise CevaViolation(f"lambda product is {params.lambda_product}, not 1")
    u, v, w = params.uvw
    if u * v * w == 1:
        raise DegenerateH("uvw = 1: H1H2H3 is a single point")
    l1, l2, l3 = params.lambdas
    f1, f2, f3 = derived_ratios(params).holder_factors()
    return (routh_denominator(u, v, w) / (f1 * f2 * f3)
            * Fraction(2) / ((l1 + 1) * (l2 + 1) * (l3 + 1)))


def rst_over_g_ratio(params: RatioParams) -> Fraction:
    """Area(RST) / Area(G1G2G3).

    Computed as Area(DEF)/Area(ABC) * Area(RST)/Area(DEF) / (Area(G1G2G3)/Area(ABC)).
    When uvw = 1 the squared numerators cancel and this is the product of
    def_ratio with the quotient of the two Routh denominators.
    """
    if params.lambda_product == 1:
        raise DegenerateG("lambda product = 1: G1G2G3 is a single point")
    l1, l2, l3 = params.lambdas
    return def_ratio(l1, l2, l3) * rst_def_ratio(params) / routh_ratio(l1, l2, l3)


def rst_over_g_ratio_uvw1(params: RatioParams) -> Fraction:
    """The uvw = 1 form: def_ratio * routh_denominator(lambdas) / holder factors."""
    if params.lambda_product == 1:
        raise DegenerateG("lambda product = 1: G1G2G3 is a single point")
    if params.uvw_product != 1:
        raise CevaViolation("this form requires uvw = 1")
    l1, l2, l3 = params.lambdas
    f1, f2, f3 = derived_ratios(params).holder_factors()
    return def_ratio(l1, l2, l3) * routh_denominator(l1, l2, l3) / (f1 * f2 * f3)


@dataclass(frozen=True)
class RigbyAreas:
    p: Fraction   # Area(AEF)
    q: Fraction   # Area(BFD)
    r: Fraction   # Area(CDE)
    x: Fraction   # Area(DEF)
    y: Fraction   # Area(G1G2G3)

    def __post_init__(self):
        for name in ("p", "q", "r", "x", "y"):
            if getattr(self, name) < 0:
                raise ValueError(f"area {name} must be nonnegative")


def rigby_areas(l1, l2, l3, total_area=1) -> RigbyAreas:
    l1, l2, l3, total = _positive(l1, l2, l3, total_area)
    # each corner triangle shares an angle with ABC: area = product of the two side fractions
    p = Fraction(1) / (1 + l2) * l3 / (1 + l3)
    q = Fraction(1) / (1 + l3) * l1 / (1 + l1)
    r = Fraction(1) / (1 + l1) * l2 / (1 + l2)
    return RigbyAreas(p * total, q * total, r * total,
                      def_ratio(l1, l2, l3) * total,
                      routh_ratio(l1, l2, l3) * total)


def rigby_lhs(a: RigbyAreas) -> Fraction:
    """x**3 + (p + q + r) x**2 - 4 p q r"""
    return a.x ** 3 + (a.p + a.q + a.r) * a.x ** 2 - 4 * a.p * a.q * a.r


def rigby_lhs_closed(l1, l2, l3, total_area=1) -> Fraction:
    """(l1 l2 l3 - 1)**2 / ((l1+1)(l2+1)(l3+1))**2 * total**3.

    The left side is cubic in the areas, hence the cubed total.
    """
    l1, l2, l3, total = _positive(l1, l2, l3, total_area)
    return (l1 * l2 * l3 - 1) ** 2 / ((l1 + 1) * (l2 + 1) * (l3 + 1)) ** 2 * total ** 3


def rigby_refinement_factor(l1, l2, l3) -> Fraction:
    """rigby_lhs / (x**2 y), as a function of the ratios alone."""
    l1, l2, l3 = _positive(l1, l2, l3)
    return routh_denominator(l1, l2, l3) / (l1 * l2 * l3 + 1) ** 2


def equality_witness_uvw(l1, l2, l3) -> Optional[tuple[Fraction, Fraction, Fraction]]:
    """(u, v, w) with uvw = 1 attaining equality in the Hölder bound.

    Returns None unless the lambda product is a perfect rational cube (the
    only case in which the witness is rational).
    """
    l1, l2, l3 = _positive(l1, l2, l3)
    c1 = exact_cbrt(l1 * l2 / l3 ** 2)
    c2 = exact_cbrt(l2 * l3 / l1 ** 2)
    c3 = exact_cbrt(l1 * l3 / l2 ** 2)
    if c1 is None or c2 is None or c3 is None:
        return None
    return ((1 + l3) / (1 + l2) * c1,
            (1 + l1) / (1 + l3) * c2,
            (1 + l2) / (1 + l1) * c3)
