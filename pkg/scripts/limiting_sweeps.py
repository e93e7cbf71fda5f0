"""Tabulate both limiting families in both directions on dyadic grids."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from cevian_lab.explorer import SweepSpec, run_sweep


@dataclass(frozen=True)
class GridConfig:
    depth: int = 10      # grid is 2**-1 .. 2**-depth and its reciprocal
    small: Fraction = Fraction(1, 100)
    large: Fraction = Fraction(100)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=GridConfig.depth)
    cfg = GridConfig(depth=ap.parse_args().depth)
    halves = tuple(Fraction(1, 2 ** k) for k in range(1, cfg.depth + 1))
    doubles = tuple(1 / e for e in halves)
    for family in ("ratio11", "ratio16"):
        for direction, grid in (("to_zero", halves), ("to_infinity", doubles)):
            reports = run_sweep(SweepSpec(family, grid, direction))
            trend = reports[-1].witness
            print(f"{family} {direction} (expected {trend['expected_trend']}, "
                  f"strictly monotone: {trend['strictly_monotone']})")
            for r in reports[:-1]:
                v = r.witness["value"]
                flag = "<small" if v < cfg.small else ">large" if v > cfg.large else ""
                print(f"  eps={str(r.witness['epsilon']):>8}  value~{float(v):.6g}  "
                      f"bits={r.witness['bit_length']:>4}  {flag}")


if __name__ == "__main__":
    main()
