"""Construction of the named-point configuration from a triangle and six ratios."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (DegenerateTriangle, InfinitePoint, InfiniteVertex,
                     ZeroDenominator)
from .kernel import (HLine, HPoint, division_ratio, fmt_rational, join, meet,
                     parse_rational, point, section_point, signed_area)
from .params import RatioParams

POINT_NAMES = ("A", "B", "C", "D", "E", "F", "K", "L", "M", "N", "Q", "P",
               "R", "S", "T", "G1", "G2", "G3", "H1", "H2", "H3")

TRIANGLES = {
    "ABC": ("A", "B", "C"),
    "DEF": ("D", "E", "F"),
    "G1G2G3": ("G1", "G2", "G3"),
    "H1H2H3": ("H1", "H2", "H3"),
    "RST": ("R", "S", "T"),
    "AEF": ("A", "E", "F"),
    "BFD": ("B", "F", "D"),
    "CDE": ("C", "D", "E"),
}

# intersection point -> the two (point, point) lines defining it
INTERSECTIONS = {
    "N": (("A", "K"), ("E", "F")),
    "Q": (("B", "L"), ("D", "F")),
    "P": (("C", "M"), ("D", "E")),
    "R": (("D", "N"), ("E", "Q")),
    "S": (("F", "P"), ("E", "Q")),
    "T": (("F", "P"), ("D", "N")),
    "G1": (("B", "E"), ("C", "F")),
    "G2": (("A", "D"), ("C", "F")),
    "G3": (("A", "D"), ("B", "E")),
    "H1": (("B", "L"), ("C", "M")),
    "H2": (("A", "K"), ("C", "M")),
    "H3": (("A", "K"), ("B", "L")),
}

UNIT_TRIANGLE = (point(0, 0), point(1, 0), point(0, 1))


@dataclass(frozen=True)
class Scene:
    A: HPoint
    B: HPoint
    C: HPoint
    D: HPoint
    E: HPoint
    F: HPoint
    K: HPoint
    L: HPoint
    M: HPoint
    N: HPoint
    Q: HPoint
    P: HPoint
    R: HPoint
    S: HPoint
    T: HPoint
    G1: HPoint
    G2: HPoint
    G3: HPoint
    H1: HPoint
    H2: HPoint
    H3: HPoint
    params: RatioParams
    degeneracies: frozenset = field(default_factory=frozenset)

    def __getitem__(self, name: str) -> HPoint:
        if name not in POINT_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def line(self, p: str, q: str) -> HLine:
        return join(self[p], self[q])

    def vertices(self, tri: str) -> tuple[HPoint, HPoint, HPoint]:
        try:
            names = TRIANGLES[tri]
        except KeyError:
            raise KeyError(f"unknown triangle {tri!r}; expected one of {sorted(TRIANGLES)}") from None
        return tuple(self[n] for n in names)

    def area(self, tri: str) -> Fraction:
        """Unsigned area of a named triangle."""
        vs = self.vertices(tri)
        try:
            return abs(signed_area(*vs))
        except InfinitePoint as exc:
            raise InfiniteVertex(f"triangle {tri} has a vertex at infinity") from exc

    def signed_area(self, tri: str) -> Fraction:
        try:
            return signed_area(*self.vertices(tri))
        except InfinitePoint as exc:
            raise InfiniteVertex(f"triangle {tri} has a vertex at infinity") from exc

    # serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        d = {name: [fmt_rational(c) for c in self[name]] for name in POINT_NAMES}
        d["params"] = self.params.as_dict()
        d["degeneracies"] = sorted(self.degeneracies)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "Scene":
        pts = {name: HPoint(*(parse_rational(c) for c in d[name])) for name in POINT_NAMES}
        return cls(**pts, params=RatioParams.from_dict(d["params"]),
                   degeneracies=frozenset(d.get("degeneracies", ())))

    @classmethod
    def from_json(cls, text: str) -> "Scene":
        return cls.from_dict(json.loads(text))

    def identical(self, other: "Scene") -> bool:
        """Componentwise (not merely projective) equality of every stored triple."""
        return (all(self[n].identical(other[n]) for n in POINT_NAMES)
                and self.params == other.params
                and self.degeneracies == other.degeneracies)


def build_scene(A: HPoint, B: HPoint, C: HPoint, params: RatioParams) -> Scene:
    if not (A.is_finite and B.is_finite and C.is_finite):
        raise DegenerateTriangle("triangle vertices must be finite")
    if signed_area(A, B, C) == 0:
        raise DegenerateTriangle("A, B, C are collinear")

    pts: dict[str, HPoint] = {"A": A, "B": B, "C": C}
    pts["D"] = section_point(B, C, params.lambda1)
    pts["E"] = section_point(C, A, params.lambda2)
    pts["F"] = section_point(A, B, params.lambda3)
    pts["K"] = section_point(B, C, params.u)
    pts["L"] = section_point(C, A, params.v)
    pts["M"] = section_point(A, B, params.w)

    flags = set()
    # dict order respects dependencies: N, Q, P before R, S, T
    for name, ((a, b), (c, d)) in INTERSECTIONS.items():
        # IdenticalLines propagates: a coinciding defining pair is fatal
        X = meet(join(pts[a], pts[b]), join(pts[c], pts[d]))
        if not X.is_finite:
            flags.add(f"{name}_at_infinity")
        pts[name] = X
    if pts["G1"] == pts["G2"] == pts["G3"]:
        flags.add("G_concurrent")
    if pts["H1"] == pts["H2"] == pts["H3"]:
        flags.add("H_concurrent")
    return Scene(**pts, params=params, degeneracies=frozenset(flags))


def unit_scene(params: RatioParams) -> Scene:
    """Scene on the canonical triangle (0,0), (1,0), (0,1)."""
    return build_scene(*UNIT_TRIANGLE, params)


def scene_ratios(s: Scene) -> RatioParams:
    return RatioParams(
        division_ratio(s.B, s.C, s.D),
        division_ratio(s.C, s.A, s.E),
        division_ratio(s.A, s.B, s.F),
        division_ratio(s.B, s.C, s.K),
        division_ratio(s.C, s.A, s.L),
        division_ratio(s.A, s.B, s.M),
    )


def geometric_ratio(s: Scene, num: str, den: str) -> Fraction:
    """|Area(num)| / |Area(den)| from coordinates alone."""
    d = s.area(den)
    if d == 0:
        raise ZeroDenominator(f"triangle {den} is degenerate")
    return s.area(num) / d


def point_in_triangle(s: Scene, X: HPoint, tri: str) -> bool:
    """Closed containment of X in the named triangle.

    A triangle whose vertices are collinear is treated as the segment (or the
    single point) they span.
    """
    if not X.is_finite:
        raise InfiniteVertex("query point is at infinity")
    return _in_closed_triangle(X, *s.vertices(tri))


def _in_closed_triangle(X: HPoint, P: HPoint, Q: HPoint, R: HPoint) -> bool:
    for V in (P, Q, R):
        if not V.is_finite:
            raise InfiniteVertex(f"{V!r} is at infinity")
    if signed_area(P, Q, R) == 0:
        return _in_collinear_hull(X, P, Q, R)
    a1 = signed_area(X, Q, R)
    a2 = signed_area(P, X, R)
    a3 = signed_area(P, Q, X)
    return (a1 >= 0 and a2 >= 0 and a3 >= 0) or (a1 <= 0 and a2 <= 0 and a3 <= 0)


def _in_collinear_hull(X, *vs) -> bool:
    xy = [v.xy for v in vs]
    x, y = X.xy
    distinct = sorted(set(xy))
    if len(distinct) == 1:
        return (x, y) == distinct[0]
    (x0, y0), (x1, y1) = distinct[0], distinct[-1]
    if (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) != 0:
        return False
    return min(x0, x1) <= x <= max(x0, x1) and min(y0, y1) <= y <= max(y0, y1)


def boundary_incidence(s: Scene, X: HPoint, tri: str) -> list[str]:
    """Names of the triangle's edges that X lies on (exactly)."""
    names = TRIANGLES[tri]
    out = []
    for i in range(3):
        a, b = names[i], names[(i + 1) % 3]
        if s[a] == s[b]:
            continue
        if signed_area(s[a], s[b], X) == 0:
            out.append(a + b)
    return out
