"""Certified arithmetic in Q(t) with t = s**(1/3), s a positive rational.

Every quantity involving a cube root is written exactly as ``a + b*t + c*t**2``
with rational a, b, c (reducing with t**3 = s). When s is a perfect rational
cube, t itself is rational and everything collapses to a plain Fraction.
Otherwise 1, t, t**2 are linearly independent over Q, so an element is zero
iff a = b = c = 0, and a nonzero element has its sign decided by refining a
rational enclosure of t until the enclosure excludes zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

#: starting enclosure precision, in bits below the binary point
DEFAULT_BITS = 64
MAX_BITS = 1 << 16


def icbrt(n: int) -> int:
    """floor(n ** (1/3)) for n >= 0, exact for arbitrarily large ints."""
    if n < 0:
        raise ValueError("icbrt of a negative integer")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def exact_cbrt(s: Fraction) -> Optional[Fraction]:
    """Rational cube root of s, or None when s is not a perfect rational cube."""
    s = Fraction(s)
    sign = -1 if s < 0 else 1
    p, q = abs(s.numerator), s.denominator
    a, b = icbrt(p), icbrt(q)
    if a ** 3 == p and b ** 3 == q:
        return sign * Fraction(a, b)
    return None


def cbrt_enclosure(s: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= s**(1/3) <= hi with hi - lo <= 2**-bits / den(s)."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("cube root enclosure needs s > 0")
    p, q = s.numerator, s.denominator
    # s**(1/3) = (p*q*q)**(1/3) / q
    scale = 1 << bits
    k = icbrt(p * q * q * scale ** 3)
    lo = Fraction(k, q * scale)
    if k ** 3 == p * q * q * scale ** 3:
        return lo, lo
    return lo, Fraction(k + 1, q * scale)


@dataclass(frozen=True)
class Surd:
    """Element a + b*t + c*t**2 of Q(t), t = radicand**(1/3)."""

    a: Fraction
    b: Fraction
    c: Fraction
    radicand: Fraction

    @classmethod
    def const(cls, x, radicand) -> "Surd":
        return cls(Fraction(x), Fraction(0), Fraction(0), Fraction(radicand))

    @classmethod
    def root(cls, radicand) -> "Surd":
        """The element t itself (folded to a constant when t is rational)."""
        radicand = Fraction(radicand)
        t = exact_cbrt(radicand)
        if t is not None:
            return cls.const(t, radicand)
        return cls(Fraction(0), Fraction(1), Fraction(0), radicand)

    def _lift(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.radicand != self.radicand:
                raise ValueError("mixing different cube-root fields")
            return other
        return Surd.const(other, self.radicand)

    def __add__(self, other) -> "Surd":
        o = self._lift(other)
        return Surd(self.a + o.a, self.b + o.b, self.c + o.c, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, -self.c, self.radicand)

    def __sub__(self, other) -> "Surd":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Surd":
        return self._lift(other) - self

    def __mul__(self, other) -> "Surd":
        o = self._lift(other)
        s = self.radicand
        a0, a1, a2 = self.a, self.b, self.c
        b0, b1, b2 = o.a, o.b, o.c
        # t**3 = s, t**4 = s*t
        return Surd(a0 * b0 + s * (a1 * b2 + a2 * b1),
                    a0 * b1 + a1 * b0 + s * a2 * b2,
                    a0 * b2 + a1 * b1 + a2 * b0,
                    s)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Surd":
        out = Surd.const(1, self.radicand)
        for _ in range(n):
            out = out * self
        return out

    @property
    def rational(self) -> Optional[Fraction]:
        if self.b == 0 and self.c == 0:
            return self.a
        return None

    def enclosure(self, bits: int = DEFAULT_BITS) -> tuple[Fraction, Fraction]:
        r = self.rational
        if r is not None:
            return r, r
        lo, hi = cbrt_enclosure(self.radicand, bits)
        return _poly_interval(self.a, self.b, self.c, lo, hi)

    def sign(self) -> int:
        """Exact sign; terminates because a nonzero element has a nonzero value."""
        r = self.rational
        if r is not None:
            return (r > 0) - (r < 0)
        if exact_cbrt(self.radicand) is not None:
            t = exact_cbrt(self.radicand)
            v = self.a + self.b * t + self.c * t * t
            return (v > 0) - (v < 0)
        if self.a == 0 and self.b == 0 and self.c == 0:
            return 0
        bits = DEFAULT_BITS
        while bits <= MAX_BITS:
            lo, hi = self.enclosure(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError("sign not certified within precision cap")


def _poly_interval(a, b, c, lo, hi):
    # t in [lo, hi] with lo >= 0, so t**2 in [lo**2, hi**2]
    bl, bh = sorted((b * lo, b * hi))
    cl, ch = sorted((c * lo * lo, c * hi * hi))
    return a + bl + cl, a + bh + ch


@dataclass(frozen=True)
class CertifiedReal:
    """Quotient num/den of two Surds with den > 0."""

    num: Surd
    den: Surd

    def __post_init__(self):
        if self.den.sign() <= 0:
            raise ValueError("CertifiedReal denominator must be positive")

    @classmethod
    def of(cls, num: Surd, den=1) -> "CertifiedReal":
        return cls(num, num._lift(den))

    @property
    def exact(self) -> Optional[Fraction]:
        n, d = self.num.rational, self.den.rational
        if n is not None and d is not None:
            return n / d
        return None

    def compare(self, x) -> int:
        """sign(self - x), exactly."""
        return (self.num - self.den * Fraction(x)).sign()

    def sign(self) -> int:
        return self.num.sign()

    def enclosure(self, bits: int = DEFAULT_BITS) -> tuple[Fraction, Fraction]:
        e = self.exact
        if e is not None:
            return e, e
        nl, nh = self.num.enclosure(bits)
        dl, dh = self.den.enclosure(bits)
        if dl <= 0:
            return self.enclosure(bits * 2)
        cands = [nl / dl, nl / dh, nh / dl, nh / dh]
        return min(cands), max(cands)

    def __float__(self) -> float:
        lo, hi = self.enclosure()
        return float((lo + hi) / 2)
