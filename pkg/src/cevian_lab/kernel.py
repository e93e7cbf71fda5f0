"""Exact projective primitives over the rationals.

Points and lines are homogeneous triples of :class:`fractions.Fraction`.
Triples are never normalized; equality between two points (or two lines)
means the triples are proportional.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (IdenticalLines, IdenticalPoints, InfinitePoint,
                     InvalidRatio, NotCollinear, NotInterior)

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal and float notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InvalidRatio(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InvalidRatio(f"zero denominator: {text!r}")
    return Fraction(num, den)


def fmt_rational(x: Fraction) -> str:
    """Reduced ``"p/q"`` string; integers keep the ``/1`` suffix."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def _cross(a: tuple, b: tuple) -> tuple:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _proportional(a: tuple, b: tuple) -> bool:
    return not any(_cross(a, b))


def _canonical(t: tuple) -> tuple:
    pivot = next(c for c in reversed(t) if c != 0)
    return tuple(c / pivot for c in t)


def det3(r0: tuple, r1: tuple, r2: tuple) -> Fraction:
    return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
            - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
            + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))


class _Triple:
    __slots__ = ()
    coords: tuple

    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike) -> None:
        t = (as_rational(a), as_rational(b), as_rational(c))
        if not any(t):
            raise ValueError(f"{type(self).__name__} cannot be (0, 0, 0)")
        object.__setattr__(self, "coords", t)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return _proportional(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash((type(self).__name__, _canonical(self.coords)))

    def scaled(self, k: RationalLike):
        k = as_rational(k)
        if k == 0:
            raise ValueError("scale factor must be nonzero")
        return type(self)(*(k * c for c in self.coords))

    def identical(self, other) -> bool:
        """Componentwise equality (stricter than projective ``==``)."""
        return self.coords == other.coords

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"


class HPoint(_Triple):
    """Homogeneous point (X, Y, W); finite iff W != 0."""

    __slots__ = ("coords",)

    @property
    def is_finite(self) -> bool:
        return self.coords[2] != 0

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        X, Y, W = self.coords
        if W == 0:
            raise InfinitePoint(f"{self!r} is at infinity")
        return X / W, Y / W


class HLine(_Triple):
    """Homogeneous line aX + bY + cW = 0."""

    __slots__ = ("coords",)


def point(x: RationalLike, y: RationalLike) -> HPoint:
    """Finite point from affine coordinates."""
    return HPoint(x, y, 1)


def join(P: HPoint, Q: HPoint) -> HLine:
    c = _cross(P.coords, Q.coords)
    if not any(c):
        raise IdenticalPoints(f"{P!r} and {Q!r} are the same point")
    return HLine(*c)


def meet(l: HLine, m: HLine) -> HPoint:
    c = _cross(l.coords, m.coords)
    if not any(c):
        raise IdenticalLines(f"{l!r} and {m!r} are the same line")
    return HPoint(*c)


def incident(P: HPoint, l: HLine) -> bool:
    return sum(p * a for p, a in zip(P.coords, l.coords)) == 0


def concurrent(l: HLine, m: HLine, n: HLine) -> bool:
    """True iff the three lines share a point, possibly at infinity."""
    if l == m or m == n or l == n:
        raise IdenticalLines("concurrency is undefined for repeated lines")
    return det3(l.coords, m.coords, n.coords) == 0


def signed_area(P: HPoint, Q: HPoint, R: HPoint) -> Fraction:
    """Signed area, positive for counter-clockwise P, Q, R."""
    for X in (P, Q, R):
        if not X.is_finite:
            raise InfinitePoint(f"{X!r} is at infinity")
    d = det3(P.coords, Q.coords, R.coords)
    return d / (2 * P[2] * Q[2] * R[2])


def section_point(P: HPoint, Q: HPoint, ratio: RationalLike) -> HPoint:
    """Point X on segment PQ with |PX|/|XQ| = ratio."""
    ratio = as_rational(ratio)
    if ratio <= 0:
        raise InvalidRatio(f"section ratio must be positive, got {ratio}")
    (px, py), (qx, qy) = P.xy, Q.xy
    if (px, py) == (qx, qy):
        raise IdenticalPoints("section of a zero-length segment")
    s = 1 + ratio
    return point((px + ratio * qx) / s, (py + ratio * qy) / s)


def division_ratio(P: HPoint, Q: HPoint, X: HPoint) -> Fraction:
    """|PX|/|XQ| for X strictly inside segment PQ."""
    (px, py), (qx, qy), (x, y) = P.xy, Q.xy, X.xy
    dx, dy = qx - px, qy - py
    if dx == 0 and dy == 0:
        raise IdenticalPoints("division of a zero-length segment")
    if dx * (y - py) - dy * (x - px) != 0:
        raise NotCollinear(f"{X!r} is not on line {P!r}{Q!r}")
    t = ((x - px) * dx + (y - py) * dy) / (dx * dx + dy * dy)
    if not 0 < t < 1:
        raise NotInterior(f"{X!r} is not strictly between {P!r} and {Q!r}")
    return t / (1 - t)
