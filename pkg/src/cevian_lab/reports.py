from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .certified import CertifiedReal
from .kernel import HPoint, fmt_rational

SCHEMA = "cevian-lab/1"

HOLDS = "holds"
FAILS = "fails"
DEGENERATE = "degenerate"
VERDICTS = (HOLDS, FAILS, DEGENERATE)


def encode(value: Any) -> Any:
    """JSON-ready form: rationals as "p/q", enclosures as ["lo", "hi"]."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, CertifiedReal):
        exact = value.exact
        if exact is not None:
            return fmt_rational(exact)
        lo, hi = value.enclosure()
        return [fmt_rational(lo), fmt_rational(hi)]
    if isinstance(value, HPoint):
        if value.is_finite:
            return ",".join(fmt_rational(c) for c in value.xy)
        return [fmt_rational(c) for c in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


@dataclass
class Report:
    check_name: str
    params: dict
    verdict: str
    witness: dict = field(default_factory=dict)
    notes: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "check": self.check_name,
            "params": encode(self.params),
            "verdict": self.verdict,
            "witness": encode(self.witness),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def summarize(reports) -> dict:
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        counts[r.verdict] += 1
    return {"schema": SCHEMA, "summary": True, "total": len(reports), **counts}
