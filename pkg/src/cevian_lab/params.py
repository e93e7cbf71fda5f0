from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .errors import NonPositiveRatio
from .kernel import as_rational, fmt_rational, parse_rational

NAMES = ("lambda1", "lambda2", "lambda3", "u", "v", "w")


@dataclass(frozen=True)
class RatioParams:
    """The six side-division ratios of a two-trio cevian configuration.

    lambda1 = |BD|/|DC|, lambda2 = |CE|/|EA|, lambda3 = |AF|/|FB| place
    D, E, F; u, v, w place K, L, M on BC, CA, AB the same way.
    """

    lambda1: Fraction
    lambda2: Fraction
    lambda3: Fraction
    u: Fraction = Fraction(1)
    v: Fraction = Fraction(1)
    w: Fraction = Fraction(1)

    def __post_init__(self):
        for f in fields(self):
            value = as_rational(getattr(self, f.name))
            if value <= 0:
                raise NonPositiveRatio(f"{f.name} must be positive, got {value}")
            object.__setattr__(self, f.name, value)

    @classmethod
    def of(cls, lambdas, uvw=(1, 1, 1)) -> "RatioParams":
        return cls(*lambdas, *uvw)

    @classmethod
    def from_strings(cls, values) -> "RatioParams":
        return cls(*(parse_rational(v) for v in values))

    @property
    def lambdas(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.lambda1, self.lambda2, self.lambda3

    @property
    def uvw(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.u, self.v, self.w

    @property
    def lambda_product(self) -> Fraction:
        return self.lambda1 * self.lambda2 * self.lambda3

    @property
    def uvw_product(self) -> Fraction:
        return self.u * self.v * self.w

    @property
    def total_product(self) -> Fraction:
        return self.lambda_product * self.uvw_product

    def as_dict(self) -> dict[str, str]:
        return {name: fmt_rational(getattr(self, name)) for name in NAMES}

    @classmethod
    def from_dict(cls, d: dict) -> "RatioParams":
        return cls(*(parse_rational(d[name]) for name in NAMES))
