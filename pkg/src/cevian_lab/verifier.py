"""Executable checks for each theorem, corollary and claim.

Every check returns a :class:`Report`. All comparisons are exact; there is
no epsilon anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import closed_forms as cf
from . import sampling
from .errors import DegenerateTriangle, PreconditionViolated, UnknownCheck
from .kernel import (HPoint, det3, incident, join, meet, point,
                     signed_area)
from .params import RatioParams
from .reports import DEGENERATE, FAILS, HOLDS, Report
from .scene import (UNIT_TRIANGLE, Scene, boundary_incidence, build_scene,
                    geometric_ratio, point_in_triangle)


def _verdict(ok: bool) -> str:
    return HOLDS if ok else FAILS


def _scene(params: RatioParams, triangle=None) -> Scene:
    return build_scene(*(triangle or UNIT_TRIANGLE), params)


def _triangle_params(triangle) -> dict:
    if triangle is None:
        return {}
    return {"triangle": list(triangle)}


def _rst_lines(s: Scene):
    return s.line("D", "N"), s.line("E", "Q"), s.line("F", "P")


# -- the main inequality and its concurrency corollaries ---------------------

def check_theorem_2_1(params: RatioParams, triangle=None) -> Report:
    s = _scene(params, triangle)
    p = params.as_dict() | _triangle_params(triangle)
    if any(f"{n}_at_infinity" in s.degeneracies for n in "RST"):
        return Report("theorem21", p, DEGENERATE, {"degeneracies": sorted(s.degeneracies)},
                      "R, S, T not all finite")
    lhs = geometric_ratio(s, "RST", "DEF")
    bound = cf.holder_bound_rhs(params.total_product)
    cmp = bound.compare(lhs)
    d = cf.derived_ratios(params)
    closed = cf.rst_def_ratio(params)
    balanced = d.alpha == d.beta == d.gamma
    witness = {
        "area_ratio_rst_def": lhs,
        "bound": bound,
        "product": params.total_product,
        "alpha": d.alpha, "beta": d.beta, "gamma": d.gamma,
        "closed_form": closed,
        "closed_form_matches": closed == lhs,
        "equality": cmp == 0,
        "equality_iff_balanced": (cmp == 0) == balanced,
    }
    return Report("theorem21", p, _verdict(cmp >= 0), witness)


def _rst_concurrency(s: Scene) -> dict:
    dn, eq, fp = _rst_lines(s)
    det = det3(dn.coords, eq.coords, fp.coords)
    X = meet(dn, eq)
    return {
        "determinant_zero": det == 0,
        "common_point_incident": incident(X, fp),
        "common_point": X,
        "area_rst": s.area("RST"),
    }


def check_corollary_2_2(params: RatioParams, triangle=None) -> Report:
    if params.total_product != 1:
        raise PreconditionViolated(f"lambda1 lambda2 lambda3 u v w = {params.total_product}, need 1")
    w = _rst_concurrency(_scene(params, triangle))
    ok = w["determinant_zero"] and w["common_point_incident"] and w["area_rst"] == 0
    return Report("corollary22", params.as_dict() | _triangle_params(triangle), _verdict(ok), w)


def check_zetel(params: RatioParams, triangle=None) -> Report:
    if params.lambda_product != 1 or params.uvw_product != 1:
        raise PreconditionViolated("both trios must be concurrent (each product = 1)")
    w = _rst_concurrency(_scene(params, triangle))
    ok = w["determinant_zero"] and w["common_point_incident"]
    return Report("zetel", params.as_dict() | _triangle_params(triangle), _verdict(ok), w)


# -- Schlömilch / Lemoine ---------------------------------------------------

def _midpoint(P: HPoint, Q: HPoint) -> HPoint:
    (px, py), (qx, qy) = P.xy, Q.xy
    return point((px + qx) / 2, (py + qy) / 2)


def foot_of_perpendicular(X: HPoint, P: HPoint, Q: HPoint) -> HPoint:
    """Orthogonal projection of X onto line PQ (not restricted to the segment)."""
    (x, y), (px, py), (qx, qy) = X.xy, P.xy, Q.xy
    dx, dy = qx - px, qy - py
    t = ((x - px) * dx + (y - py) * dy) / (dx * dx + dy * dy)
    return point(px + t * dx, py + t * dy)


def symmedian_point(A: HPoint, B: HPoint, C: HPoint) -> HPoint:
    """Barycentric (a**2 : b**2 : c**2) with exact squared side lengths."""
    (ax, ay), (bx, by), (cx, cy) = A.xy, B.xy, C.xy
    a2 = (bx - cx) ** 2 + (by - cy) ** 2
    b2 = (cx - ax) ** 2 + (cy - ay) ** 2
    c2 = (ax - bx) ** 2 + (ay - by) ** 2
    total = a2 + b2 + c2
    return point((a2 * ax + b2 * bx + c2 * cx) / total,
                 (a2 * ay + b2 * by + c2 * cy) / total)


def _is_obtuse(A, B, C) -> bool:
    def dot(O, P, Q):
        (ox, oy), (px, py), (qx, qy) = O.xy, P.xy, Q.xy
        return (px - ox) * (qx - ox) + (py - oy) * (qy - oy)
    return dot(A, B, C) < 0 or dot(B, C, A) < 0 or dot(C, A, B) < 0


def check_schlomilch(A: HPoint, B: HPoint, C: HPoint) -> Report:
    if not (A.is_finite and B.is_finite and C.is_finite) or signed_area(A, B, C) == 0:
        raise DegenerateTriangle("A, B, C must be finite and non-collinear")
    lines = []
    for V, P, Q in ((A, B, C), (B, C, A), (C, A, B)):
        side_mid = _midpoint(P, Q)
        alt_mid = _midpoint(V, foot_of_perpendicular(V, P, Q))
        lines.append(join(side_mid, alt_mid))
    K = symmedian_point(A, B, C)
    det = det3(*(l.coords for l in lines))
    on_all = all(incident(K, l) for l in lines)
    coincident = lines[0] == lines[1] or lines[1] == lines[2] or lines[0] == lines[2]
    witness = {
        "determinant_zero": det == 0,
        "symmedian_on_all_lines": on_all,
        "point": K,
        "obtuse": _is_obtuse(A, B, C),
        "coincident_lines": coincident,
    }
    notes = "two connecting lines coincide (right angle)" if coincident else ""
    params = {"triangle": [A, B, C]}
    return Report("schlomilch", params, _verdict(det == 0 and on_all), witness, notes)


# -- Möbius / Rigby / refinement ---------------------------------------------

def _lambdas_dict(l1, l2, l3) -> dict:
    return {"lambda1": Fraction(l1), "lambda2": Fraction(l2), "lambda3": Fraction(l3)}


def check_moebius(l1, l2, l3) -> Report:
    l1, l2, l3 = (Fraction(x) for x in (l1, l2, l3))
    if l1 * l2 * l3 != 1:
        raise PreconditionViolated(f"lambda product = {l1 * l2 * l3}, need 1")
    lhs = cf.rigby_lhs(cf.rigby_areas(l1, l2, l3, 1))
    return Report("moebius", _lambdas_dict(l1, l2, l3), _verdict(lhs == 0), {"rigby_lhs": lhs})


def check_rigby(l1, l2, l3) -> Report:
    areas = cf.rigby_areas(l1, l2, l3, 1)
    lhs = cf.rigby_lhs(areas)
    concurrent_trio = Fraction(l1) * l2 * l3 == 1
    ok = lhs >= 0 and ((lhs == 0) == concurrent_trio)
    witness = {"rigby_lhs": lhs, "equality": lhs == 0, "product_is_one": concurrent_trio,
               "p": areas.p, "q": areas.q, "r": areas.r, "x": areas.x, "y": areas.y}
    return Report("rigby", _lambdas_dict(l1, l2, l3), _verdict(ok), witness)


def check_theorem_2_4(l1, l2, l3) -> Report:
    areas = cf.rigby_areas(l1, l2, l3, 1)
    lhs = cf.rigby_lhs(areas)
    rhs = areas.x ** 2 * areas.y
    factor = cf.rigby_refinement_factor(l1, l2, l3)
    ok = lhs >= rhs
    witness = {"rigby_lhs": lhs, "x2y": rhs, "factor": factor,
               "identity_holds": lhs == factor * rhs,
               "closed_lhs_matches": lhs == cf.rigby_lhs_closed(l1, l2, l3)}
    if areas.y > 0:
        witness["factor_exceeds_one"] = factor > 1
        ok = ok and factor > 1 and witness["identity_holds"]
    return Report("theorem24", _lambdas_dict(l1, l2, l3), _verdict(ok), witness)


# -- containment claims ------------------------------------------------------

def _containment_claim(name, s, params, triangle, center, tri, inner_ratio) -> Report:
    inside = point_in_triangle(s, center, tri)
    ratio = geometric_ratio(s, "RST", tri)
    witness = {
        "center_inside": inside,
        "center_on_edges": boundary_incidence(s, center, tri),
        "area_ratio": ratio,
        "closed_form_ratio": inner_ratio,
        "closed_form_matches": inner_ratio == ratio,
        "exceeds_one": ratio > 1,
    }
    p = params.as_dict() | _triangle_params(triangle)
    if not inside:
        return Report(name, p, DEGENERATE, witness, "containment hypothesis not met")
    contained = all(point_in_triangle(s, s[v], tri) for v in "RST")
    witness["rst_vertices_contained"] = contained
    notes = "" if contained else "investigate: hypothesis holds but RST is not inside"
    return Report(name, p, _verdict(ratio < 1), witness, notes)


def check_claim_10(params: RatioParams, triangle=None) -> Report:
    if params.lambda_product == 1 or params.uvw_product != 1:
        raise PreconditionViolated("needs lambda product != 1 and uvw = 1")
    s = _scene(params, triangle)
    return _containment_claim("claim10", s, params, triangle, s.H1, "G1G2G3",
                              cf.rst_over_g_ratio(params))


def check_claim_15(params: RatioParams, triangle=None) -> Report:
    if params.lambda_product != 1 or params.uvw_product == 1:
        raise PreconditionViolated("needs lambda product = 1 and uvw != 1")
    s = _scene(params, triangle)
    return _containment_claim("claim15", s, params, triangle, s.G1, "H1H2H3",
                              cf.rst_over_h_ratio(params))


# -- closed form vs coordinates --------------------------------------------

def check_oracle(params: RatioParams, triangle=None) -> Report:
    """Every applicable closed form against the coordinate computation."""
    s = _scene(params, triangle)
    l1, l2, l3 = params.lambdas
    pairs = {
        "routh_ratio": (cf.routh_ratio(l1, l2, l3), geometric_ratio(s, "G1G2G3", "ABC")),
        "def_ratio": (cf.def_ratio(l1, l2, l3), geometric_ratio(s, "DEF", "ABC")),
        "rst_def_ratio": (cf.rst_def_ratio(params), geometric_ratio(s, "RST", "DEF")),
        "h_triangle_ratio": (cf.h_triangle_ratio(*params.uvw), geometric_ratio(s, "H1H2H3", "ABC")),
    }
    if params.lambda_product != 1:
        pairs["rst_over_g_ratio"] = (cf.rst_over_g_ratio(params), geometric_ratio(s, "RST", "G1G2G3"))
    elif params.uvw_product != 1:
        pairs["rst_over_h_ratio"] = (cf.rst_over_h_ratio(params), geometric_ratio(s, "RST", "H1H2H3"))
    total = s.area("ABC")
    areas = cf.rigby_areas(l1, l2, l3, total)
    for name, tri in (("p", "AEF"), ("q", "BFD"), ("r", "CDE"), ("x", "DEF"), ("y", "G1G2G3")):
        pairs[f"rigby_{name}"] = (getattr(areas, name), s.area(tri))
    witness = {k: {"closed_form": a, "geometric": b, "equal": a == b} for k, (a, b) in pairs.items()}
    ok = all(a == b for a, b in pairs.values())
    return Report("oracle", params.as_dict() | _triangle_params(triangle), _verdict(ok), witness)


# -- suite driver -----------------------------------------------------------

@dataclass(frozen=True)
class CheckSpec:
    sample: Callable  # (rng, bound) -> args tuple for run
    run: Callable


def _lambdas_only(fn):
    return lambda params, triangle=None: fn(*params.lambdas)


def _oracle_sample(rng, bound, index):
    tri = sampling.random_triangle(rng, bound)
    lambdas = sampling.ceva_lambdas(rng, bound) if index % 2 else sampling.random_ratios(rng, 3, bound)
    return RatioParams.of(lambdas, sampling.random_ratios(rng, 3, bound)), tri


CHECKS: dict[str, CheckSpec] = {
    "theorem21": CheckSpec(lambda rng, b, i: (sampling.cube_product_params(rng, b),), check_theorem_2_1),
    "corollary22": CheckSpec(lambda rng, b, i: (sampling.unit_product_params(rng, b),), check_corollary_2_2),
    "zetel": CheckSpec(lambda rng, b, i: (RatioParams.of(sampling.ceva_lambdas(rng, b),
                                                         sampling.ceva_uvw(rng, b)),), check_zetel),
    "schlomilch": CheckSpec(lambda rng, b, i: sampling.random_triangle(rng, b), check_schlomilch),
    "moebius": CheckSpec(lambda rng, b, i: sampling.ceva_lambdas(rng, b), check_moebius),
    "rigby": CheckSpec(lambda rng, b, i: tuple(sampling.random_ratios(rng, 3, b)), check_rigby),
    "theorem24": CheckSpec(lambda rng, b, i: tuple(sampling.random_ratios(rng, 3, b)), check_theorem_2_4),
    "claim10": CheckSpec(lambda rng, b, i: (RatioParams.of(sampling.non_ceva_lambdas(rng, b),
                                                           sampling.ceva_uvw(rng, b)),), check_claim_10),
    "claim15": CheckSpec(lambda rng, b, i: (RatioParams.of(sampling.ceva_lambdas(rng, b),
                                                           sampling.non_ceva_uvw(rng, b)),), check_claim_15),
    "oracle": CheckSpec(_oracle_sample, check_oracle),
}

# checks whose runner takes three lambdas rather than RatioParams
LAMBDA_CHECKS = {"moebius": check_moebius, "rigby": check_rigby, "theorem24": check_theorem_2_4}


def resolve_checks(names: Iterable[str]) -> list[str]:
    names = [n.strip() for n in names if n.strip()]
    if not names:
        raise UnknownCheck("no checks given")
    for n in names:
        if n not in CHECKS:
            raise UnknownCheck(f"unknown check {n!r}; known: {', '.join(CHECKS)}")
    return names


def run_check(name: str, params: RatioParams | None = None, triangle=None) -> Report:
    """Run one check on explicit inputs."""
    (name,) = resolve_checks([name])
    if name == "schlomilch":
        if triangle is None:
            raise PreconditionViolated("schlomilch needs a triangle")
        return check_schlomilch(*triangle)
    if params is None:
        raise PreconditionViolated(f"{name} needs explicit ratios")
    if name in LAMBDA_CHECKS:
        return LAMBDA_CHECKS[name](*params.lambdas)
    return CHECKS[name].run(params, triangle)


def run_suite(seed: int, samples: int, checks: Sequence[str],
              bound: int = sampling.DEFAULT_BOUND) -> list[Report]:
    """Deterministic batch: for each check in order, ``samples`` constrained draws."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = resolve_checks(checks)
    reports = []
    for name in names:
        spec = CHECKS[name]
        for i in range(samples):
            rng = sampling.rng_for(seed, name, i)
            reports.append(spec.run(*spec.sample(rng, bound, i)))
    return reports
