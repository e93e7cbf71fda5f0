"""Run seeded verifier batches and print a per-check verdict table."""

import argparse
from collections import Counter
from dataclasses import dataclass

from cevian_lab.verifier import CHECKS, run_suite


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    samples: int = 200
    bound: int = 20
    checks: tuple = tuple(CHECKS)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    ap.add_argument("--samples", type=int, default=SuiteConfig.samples)
    ap.add_argument("--bound", type=int, default=SuiteConfig.bound)
    ap.add_argument("--checks", default=",".join(SuiteConfig.checks))
    a = ap.parse_args()
    cfg = SuiteConfig(a.seed, a.samples, a.bound, tuple(a.checks.split(",")))
    print(f"{'check':<12} {'holds':>6} {'fails':>6} {'degenerate':>10}")
    for name in cfg.checks:
        counts = Counter(r.verdict for r in run_suite(cfg.seed, cfg.samples, [name], cfg.bound))
        print(f"{name:<12} {counts['holds']:>6} {counts['fails']:>6} {counts['degenerate']:>10}")


if __name__ == "__main__":
    main()
