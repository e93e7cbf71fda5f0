"""Command-line driver.

Exit codes: 0 all verdicts hold (or exploratory success), 1 at least one
verdict fails, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import decimal
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import closed_forms as cf
from . import explorer, verifier
from .errors import CevianError, PreconditionViolated
from .kernel import HPoint, fmt_rational, parse_rational, point
from .params import RatioParams
from .reports import FAILS, SCHEMA, Report, encode, summarize
from .scene import UNIT_TRIANGLE, build_scene, geometric_ratio

DECIMAL_DIGITS = 12
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def approx_decimal(x: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Decimal string rounded to ``digits`` significant digits (approximate!)."""
    x = Fraction(x)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator))


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# -- argument parsing ---------------------------------------------------------

def _rational_list(text: str) -> list[Fraction]:
    return [parse_rational(t) for t in text.split(",") if t.strip()]


def _parse_params(args) -> Optional[RatioParams]:
    if args.lambdas is None and args.uvw is None:
        return None
    if args.lambdas is None:
        raise UsageError("--uvw given without --lambda")
    lambdas = [parse_rational(t) for t in args.lambdas]
    uvw = [parse_rational(t) for t in args.uvw] if args.uvw is not None else [1, 1, 1]
    return RatioParams.of(lambdas, uvw)


def _parse_triangle(args) -> Optional[tuple[HPoint, HPoint, HPoint]]:
    if args.triangle is None:
        return None
    pts = []
    for item in args.triangle:
        xy = item.split(",")
        if len(xy) != 2:
            raise UsageError(f"bad vertex {item!r}; expected x,y")
        pts.append(point(parse_rational(xy[0]), parse_rational(xy[1])))
    return tuple(pts)


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--lambda", dest="lambdas", nargs=3, metavar="P/Q", **d,
                   help="lambda1 lambda2 lambda3")
    p.add_argument("--uvw", nargs=3, metavar="P/Q", **d, help="u v w")
    p.add_argument("--triangle", nargs=3, metavar="X,Y", **d, help="three vertices")
    p.add_argument("--seed", type=int, **({"default": 0} if not suppress else d))
    p.add_argument("--samples", type=int, **({"default": 100} if not suppress else d))
    p.add_argument("--bound", type=int, **({"default": 20} if not suppress else d),
                   help="numerators/denominators drawn from 1..B")
    p.add_argument("--checks", **d, help="comma-separated check names")
    p.add_argument("--family", choices=("ratio11", "ratio16", "best_constant"), **d)
    p.add_argument("--grid", **d, help="comma-separated rationals")
    p.add_argument("--direction", choices=explorer.DIRECTIONS, **d)
    p.add_argument("--threshold", **d, help="value the last grid point must cross")
    p.add_argument("--target-gap", dest="target_gap", **({"default": "1/100"} if not suppress else d))
    p.add_argument("--output", choices=("json", "csv"), **({"default": "json"} if not suppress else d))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cevian-lab",
                                     description="Exact cevian area-ratio kernel and verifier.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (("eval", "closed forms vs coordinates for one configuration"),
                        ("verify", "run verification checks"),
                        ("sweep", "limiting-family and best-constant sweeps"),
                        ("open-problem", "incidence probe for the G1S, G2T, G3R triangle")):
        _add_common(sub.add_parser(name, help=help_), suppress=True)
    return parser


# -- commands -------------------------------------------------------------------

def _quantity(closed: Fraction, geometric: Fraction) -> dict:
    return {
        "closed_form": fmt_rational(closed),
        "geometric": fmt_rational(geometric),
        "equal": closed == geometric,
        "decimal_approx": approx_decimal(closed),
        "decimal_digits": DECIMAL_DIGITS,
        "exceeds_one": closed > 1,
    }


def cmd_eval(args, out) -> int:
    params = _parse_params(args)
    if params is None:
        raise UsageError("eval needs --lambda (and optionally --uvw)")
    triangle = _parse_triangle(args) or UNIT_TRIANGLE
    s = build_scene(*triangle, params)
    l1, l2, l3 = params.lambdas
    q = {
        "routh_ratio": _quantity(cf.routh_ratio(l1, l2, l3), geometric_ratio(s, "G1G2G3", "ABC")),
        "def_ratio": _quantity(cf.def_ratio(l1, l2, l3), geometric_ratio(s, "DEF", "ABC")),
        "rst_def_ratio": _quantity(cf.rst_def_ratio(params), geometric_ratio(s, "RST", "DEF")),
        "h_triangle_ratio": _quantity(cf.h_triangle_ratio(*params.uvw),
                                      geometric_ratio(s, "H1H2H3", "ABC")),
    }
    if params.lambda_product != 1:
        q["rst_over_g_ratio"] = _quantity(cf.rst_over_g_ratio(params),
                                          geometric_ratio(s, "RST", "G1G2G3"))
    if params.lambda_product == 1 and params.uvw_product != 1:
        q["rst_over_h_ratio"] = _quantity(cf.rst_over_h_ratio(params),
                                          geometric_ratio(s, "RST", "H1H2H3"))
    d = cf.derived_ratios(params)
    bound = cf.holder_bound_rhs(params.total_product)
    lhs = geometric_ratio(s, "RST", "DEF")
    lo, hi = bound.enclosure()
    all_equal = all(v["equal"] for v in q.values())
    doc = {
        "schema": SCHEMA,
        "command": "eval",
        "params": params.as_dict(),
        "quantities": q,
        "derived_ratios": encode({"alpha": d.alpha, "beta": d.beta, "gamma": d.gamma}),
        "holder_bound": {
            "value": encode(bound),
            "decimal_approx": approx_decimal((lo + hi) / 2),
            "decimal_digits": DECIMAL_DIGITS,
            "area_ratio_rst_def": fmt_rational(lhs),
            "bound_holds": bound.compare(lhs) >= 0,
        },
        "all_equal": all_equal,
    }
    out.write(_dumps(doc) + "\n")
    return EXIT_OK if all_equal else EXIT_FAIL


def _emit_reports(reports: Sequence[Report], out, extra_summary=None) -> None:
    for r in reports:
        out.write(r.to_json() + "\n")
    summary = summarize(reports)
    if extra_summary:
        summary.update(extra_summary)
    out.write(_dumps(summary) + "\n")


def _fails(reports) -> bool:
    return any(r.verdict == FAILS for r in reports)


def cmd_verify(args, out) -> int:
    if args.output != "json":
        raise UsageError("verify emits JSON lines only")
    if not getattr(args, "checks", None):
        raise UsageError("verify needs --checks")
    names = verifier.resolve_checks(args.checks.split(","))
    params = _parse_params(args)
    triangle = _parse_triangle(args)
    reports = []
    for name in names:
        explicit = triangle is not None if name == "schlomilch" else params is not None
        if explicit:
            reports.append(verifier.run_check(name, params, triangle))
        else:
            reports.extend(verifier.run_suite(args.seed, args.samples, [name], args.bound))
    _emit_reports(reports, out)
    return EXIT_FAIL if _fails(reports) else EXIT_OK


def _infer_direction(grid: list[Fraction]) -> str:
    if len(grid) > 1:
        return "to_zero" if grid[1] < grid[0] else "to_infinity"
    return "to_zero" if grid[0] <= 1 else "to_infinity"


def cmd_sweep(args, out) -> int:
    family = getattr(args, "family", None)
    grid_text = getattr(args, "grid", None)
    if family is None or grid_text is None:
        raise UsageError("sweep needs --family and --grid")
    grid = _rational_list(grid_text)
    try:
        if family == "best_constant":
            reports = [explorer.best_constant_probe(grid, parse_rational(args.target_gap))]
            rows = [("best_constant", e, v) for e, v in
                    zip(reports[0].witness["grid"], reports[0].witness["values"])]
        else:
            direction = getattr(args, "direction", None) or _infer_direction(grid)
            threshold = getattr(args, "threshold", None)
            spec = explorer.SweepSpec(family, tuple(grid), direction,
                                      parse_rational(threshold) if threshold else None)
            reports = explorer.run_sweep(spec)
            rows = [(family, r.witness["epsilon"], r.witness["value"]) for r in reports[:-1]]
    except ValueError as exc:
        if isinstance(exc, CevianError):
            raise
        raise UsageError(str(exc)) from exc
    if args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "epsilon", "value", f"decimal_approx_{DECIMAL_DIGITS}"])
        for fam, e, v in rows:
            w.writerow([fam, fmt_rational(e), fmt_rational(v), approx_decimal(v)])
    else:
        _emit_reports(reports, out)
    return EXIT_FAIL if _fails(reports) else EXIT_OK


def cmd_open_problem(args, out) -> int:
    if args.output != "json":
        raise UsageError("open-problem emits JSON lines only")
    if args.uvw is not None:
        u, v, w = (parse_rational(t) for t in args.uvw)
        if u * v * w != 1:
            raise PreconditionViolated(f"uvw = {u * v * w}, need 1")
    params = _parse_params(args)
    triangle = _parse_triangle(args)
    if params is not None:
        reports = [explorer.open_problem_probe(params, triangle)]
    else:
        reports = explorer.open_problem_batch(args.seed, args.samples, args.bound)
    matched = sum(1 for r in reports if r.holds)
    _emit_reports(reports, out, {"matched": matched, "exploratory": True})
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "sweep": cmd_sweep,
            "open-problem": cmd_open_problem}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.samples < 1:
            raise UsageError("--samples must be >= 1")
        return COMMANDS[args.command](args, out)
    except (UsageError, CevianError) as exc:
        err.write(f"cevian-lab: error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
