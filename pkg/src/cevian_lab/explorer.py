"""Limiting-family sweeps, the best-constant probe and the open-problem probe.

Grids are rational, so every value and every monotonicity comparison here is
exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import closed_forms as cf
from . import sampling
from .errors import PreconditionViolated
from .kernel import incident, meet
from .params import RatioParams
from .reports import DEGENERATE, FAILS, HOLDS, Report
from .scene import UNIT_TRIANGLE, build_scene

MIN_EPSILON = Fraction(1, 10 ** 6)
FAMILIES = ("ratio11", "ratio16")
DIRECTIONS = ("to_zero", "to_infinity")

# the trend each family is claimed to follow, per direction
EXPECTED_TREND = {
    ("ratio11", "to_zero"): "decreasing",
    ("ratio11", "to_infinity"): "increasing",
    ("ratio16", "to_zero"): "increasing",
    ("ratio16", "to_infinity"): "decreasing",
}


@dataclass(frozen=True)
class SweepSpec:
    """A one-parameter family evaluated on a rational grid of epsilons.

    ``threshold``, when set, must be crossed by the last grid value: below it
    for a decreasing trend, above it for an increasing one.
    """

    family: str
    epsilons: tuple
    direction: str
    threshold: Optional[Fraction] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}")
        eps = tuple(Fraction(e) for e in self.epsilons)
        if not eps:
            raise ValueError("empty grid")
        if any(e <= 0 for e in eps):
            raise ValueError("grid values must be positive")
        if any(e < MIN_EPSILON or e > 1 / MIN_EPSILON for e in eps):
            raise ValueError(f"grid values must lie in [{MIN_EPSILON}, {1 / MIN_EPSILON}]")
        pairs = list(zip(eps, eps[1:]))
        if self.direction == "to_zero" and not all(b < a for a, b in pairs):
            raise ValueError("to_zero grid must be strictly decreasing")
        if self.direction == "to_infinity" and not all(b > a for a, b in pairs):
            raise ValueError("to_infinity grid must be strictly increasing")
        object.__setattr__(self, "epsilons", eps)
        if self.threshold is not None:
            object.__setattr__(self, "threshold", Fraction(self.threshold))

    @property
    def expected_trend(self) -> str:
        return EXPECTED_TREND[self.family, self.direction]


def ratio11_params(eps) -> RatioParams:
    e = Fraction(eps)
    return RatioParams(e, e, e * e, e, e, 1 / (e * e))


def ratio16_params(eps) -> RatioParams:
    e = Fraction(eps)
    return RatioParams(1, 1, 1, e, 1, 1 / (e * e))


def _bits(x: Fraction) -> int:
    return max(x.numerator.bit_length(), x.denominator.bit_length())


def is_strictly_monotone(values: Sequence[Fraction], trend: str) -> bool:
    pairs = list(zip(values, values[1:]))
    if trend == "decreasing":
        return all(b < a for a, b in pairs)
    return all(b > a for a, b in pairs)


def _sweep(spec: SweepSpec, make_params, evaluate) -> list[Report]:
    name = f"sweep_{spec.family}"
    values, reports = [], []
    for i, e in enumerate(spec.epsilons):
        params = make_params(e)
        value = evaluate(params)   # DegenerateG / DegenerateH propagate
        values.append(value)
        reports.append(Report(name, params.as_dict(), HOLDS,
                              {"index": i, "epsilon": e, "value": value, "bit_length": _bits(value)}))
    trend = spec.expected_trend
    monotone = is_strictly_monotone(values, trend)
    witness = {"family": spec.family, "direction": spec.direction, "expected_trend": trend,
               "epsilons": list(spec.epsilons), "values": values, "strictly_monotone": monotone}
    ok = monotone
    if spec.threshold is not None:
        last = values[-1]
        crossed = last < spec.threshold if trend == "decreasing" else last > spec.threshold
        witness["threshold"] = spec.threshold
        witness["threshold_crossed"] = crossed
        ok = ok and crossed
    reports.append(Report(f"{name}_trend", {}, HOLDS if ok else FAILS, witness))
    return reports


def sweep_ratio_11(spec: SweepSpec) -> list[Report]:
    """Area(RST)/Area(G1G2G3) along lambda = (e, e, e^2), (u, v, w) = (e, e, e^-2)."""
    if spec.family != "ratio11":
        raise ValueError("not a ratio11 sweep")
    return _sweep(spec, ratio11_params, cf.rst_over_g_ratio)


def sweep_ratio_16(spec: SweepSpec) -> list[Report]:
    """Area(RST)/Area(H1H2H3) along lambda = (1, 1, 1), (u, v, w) = (e, 1, e^-2)."""
    if spec.family != "ratio16":
        raise ValueError("not a ratio16 sweep")
    return _sweep(spec, ratio16_params, cf.rst_over_h_ratio)


def run_sweep(spec: SweepSpec) -> list[Report]:
    return {"ratio11": sweep_ratio_11, "ratio16": sweep_ratio_16}[spec.family](spec)


def best_constant_probe(grid, target_gap=Fraction(1, 100)) -> Report:
    """F(e, e, e) = rigby_lhs / (x^2 y) along a grid shrinking toward 0."""
    grid = [Fraction(g) for g in grid]
    if not grid:
        raise ValueError("empty grid")
    if any(g <= 0 for g in grid):
        raise ValueError("grid values must be positive")
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly decreasing")
    values = [cf.rigby_refinement_factor(e, e, e) for e in grid]
    above_one = all(v > 1 for v in values)
    monotone = is_strictly_monotone(values, "decreasing")
    gap = values[-1] - 1
    ok = above_one and monotone and gap < target_gap
    witness = {"grid": grid, "values": values, "all_above_one": above_one,
               "strictly_decreasing": monotone, "final_gap": gap,
               "target_gap": Fraction(target_gap)}
    return Report("best_constant", {}, HOLDS if ok else FAILS, witness)


@dataclass(frozen=True)
class IncidenceMatrix:
    """rows: vertices V1, V2, V3 (V_i opposite the i-th of G1S, G2T, G3R);
    columns: lines AK, BL, CM."""

    entries: tuple

    def matchings(self) -> list[tuple[int, int, int]]:
        return [perm for perm in itertools.permutations(range(3))
                if all(self.entries[i][perm[i]] for i in range(3))]

    def as_lists(self) -> list[list[bool]]:
        return [list(row) for row in self.entries]


def open_problem_probe(params: RatioParams, triangle=None) -> Report:
    """Do the vertices of the triangle bounded by G1S, G2T, G3R lie on AK, BL, CM?"""
    if params.uvw_product != 1:
        raise PreconditionViolated(f"uvw = {params.uvw_product}, need 1")
    if params.lambda_product == 1:
        raise PreconditionViolated("lambda product = 1 makes G1, G2, G3 coincide")
    s = build_scene(*(triangle or UNIT_TRIANGLE), params)
    p = params.as_dict()
    pairs = (("G1", "S"), ("G2", "T"), ("G3", "R"))
    if any(s[a] == s[b] for a, b in pairs):
        return Report("open_problem", p, DEGENERATE, {}, "a G point coincides with its partner")
    lines = [s.line(a, b) for a, b in pairs]
    same = [f"{pairs[i][0]}{pairs[i][1]}={pairs[j][0]}{pairs[j][1]}"
            for i, j in ((0, 1), (0, 2), (1, 2)) if lines[i] == lines[j]]
    if same:
        return Report("open_problem", p, DEGENERATE,
                      {"coincident_lines": same, "lines": [list(l) for l in lines]},
                      "lines through G1S, G2T, G3R do not bound a triangle")
    verts = [meet(lines[1], lines[2]), meet(lines[0], lines[2]), meet(lines[0], lines[1])]
    cevians = [s.line("A", "K"), s.line("B", "L"), s.line("C", "M")]
    matrix = IncidenceMatrix(tuple(tuple(incident(V, c) for c in cevians) for V in verts))
    matches = matrix.matchings()
    witness = {
        "incidence": matrix.as_lists(),
        "matchings": [list(m) for m in matches],
        "vertices": verts,
        "vertices_distinct": len({verts[0], verts[1], verts[2]}) == 3,
    }
    return Report("open_problem", p, HOLDS if matches else FAILS, witness)


def open_problem_batch(seed: int, samples: int, bound: int = sampling.DEFAULT_BOUND) -> list[Report]:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    out = []
    for i in range(samples):
        rng = sampling.rng_for(seed, "open_problem", i)
        params = RatioParams.of(sampling.non_ceva_lambdas(rng, bound), sampling.ceva_uvw(rng, bound))
        out.append(open_problem_probe(params))
    return out
