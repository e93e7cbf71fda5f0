"""Seeded incidence probe for the open problem, with matching statistics."""

import argparse
from collections import Counter

from cevian_lab.explorer import open_problem_batch


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--bound", type=int, default=20)
    a = ap.parse_args()
    reports = open_problem_batch(a.seed, a.samples, a.bound)
    verdicts = Counter(r.verdict for r in reports)
    matchings = Counter(tuple(map(tuple, r.witness["matchings"]))
                        for r in reports if r.verdict != "degenerate")
    print(f"verdicts: {dict(verdicts)}")
    for m, n in matchings.most_common():
        print(f"  matchings {list(m) or 'none'}: {n}")
    for r in reports:
        if r.verdict == "degenerate":
            print(f"  degenerate at {r.to_dict()['params']}: {r.notes}")


if __name__ == "__main__":
    main()
