"""Suite reports: one record per check, text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

STATUSES = ("pass", "fail", "info")


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    observed: Any = None
    expected: Any = None
    elapsed: float | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    primes: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def add(self, id, anchor, ok, observed=None, expected=None, elapsed=None, info=False):
        status = "info" if info else ("pass" if ok else "fail")
        c = Check(id, anchor, status, _plain(observed), _plain(expected), elapsed)
        self.checks.append(c)
        return c

    def extend(self, other: "SuiteReport"):
        self.checks.extend(other.checks)
        for p in other.primes:
            if p not in self.primes:
                self.primes.append(p)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "primes": list(self.primes),
            "status": self.status,
            "checks": [asdict(c) for c in self.checks],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteReport":
        r = cls(d["suite"], d["seed"], list(d.get("primes", [])))
        r.checks = [Check(**c) for c in d.get("checks", [])]
        return r


def _plain(x):
    """JSON-stable rendering of observed/expected values."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


def emit_report(r: SuiteReport, format: str = "text") -> str:
    if format == "machine":
        return json.dumps(r.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"suite {r.suite}  seed={r.seed}  primes={r.primes}"]
    for c in r.checks:
        t = f"  [{c.elapsed:.2f}s]" if c.elapsed is not None else ""
        exp = f"  expected={c.expected}" if c.expected is not None else ""
        lines.append(f"{c.status.upper():4}  {c.id}  observed={c.observed}{exp}  ({c.anchor}){t}")
    n_fail = sum(c.status == "fail" for c in r.checks)
    lines.append(f"overall: {r.status.upper()} ({len(r.checks)} checks, {n_fail} failed)")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> SuiteReport:
    return SuiteReport.from_dict(json.loads(text))
