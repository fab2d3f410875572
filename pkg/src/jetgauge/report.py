"""Verification report plumbing shared by the CLI suites.

A check is pass, fail, or flagged; flagged marks internal inconsistencies
of the reference data itself and does not fail a run.  Reports always show
expected against actual, even on pass, since auditable comparison is the
whole point of the artifact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"


def fmt_float(x: float, full_precision: bool = False) -> float:
    """Round to 6 significant digits unless full precision is requested."""
    if full_precision:
        return x
    return float(f"{x:.6g}")


@dataclass
class Check:
    name: str
    status: str
    expected: Any = None
    actual: Any = None
    tolerance: Any = None
    detail: str = ""


@dataclass
class Suite:
    name: str
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, ok: bool, expected=None, actual=None,
              tolerance=None, detail: str = "", flag: bool = False) -> Check:
        status = PASS if ok else (FLAGGED if flag else FAIL)
        c = Check(name, status, expected, actual, tolerance, detail)
        self.checks.append(c)
        return c

    def flag(self, name: str, detail: str, expected=None, actual=None) -> Check:
        c = Check(name, FLAGGED, expected, actual, None, detail)
        self.checks.append(c)
        return c

    @property
    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out


@dataclass
class VerificationReport:
    suites: list[Suite] = field(default_factory=list)

    def suite(self, name: str) -> Suite:
        s = Suite(name)
        self.suites.append(s)
        return s

    @property
    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for s in self.suites:
            for k, v in s.counts.items():
                out[k] += v
        return out

    @property
    def exit_code(self) -> int:
        return 1 if self.counts[FAIL] else 0

    def to_dict(self, full_precision: bool = False) -> dict:
        def conv(v):
            if isinstance(v, float):
                return fmt_float(v, full_precision)
            if isinstance(v, (list, tuple)):
                return [conv(x) for x in v]
            return v

        return {
            "suites": [
                {
                    "name": s.name,
                    "checks": [
                        {
                            "name": c.name,
                            "status": c.status,
                            "expected": conv(c.expected),
                            "actual": conv(c.actual),
                            "tolerance": conv(c.tolerance),
                            "detail": c.detail,
                        }
                        for c in s.checks
                    ],
                    "counts": s.counts,
                }
                for s in self.suites
            ],
            "counts": self.counts,
        }

    def to_text(self, full_precision: bool = False) -> str:
        lines = []
        for s in self.suites:
            lines.append(f"== {s.name} ==")
            for c in s.checks:
                parts = [f"[{c.status.upper():7s}] {c.name}"]
                if c.expected is not None:
                    ev = fmt_float(c.expected, full_precision) if isinstance(c.expected, float) else c.expected
                    parts.append(f"expected={ev}")
                if c.actual is not None:
                    av = fmt_float(c.actual, full_precision) if isinstance(c.actual, float) else c.actual
                    parts.append(f"actual={av}")
                if c.tolerance is not None:
                    parts.append(f"tol={c.tolerance}")
                if c.detail:
                    parts.append(f"({c.detail})")
                lines.append("  " + "  ".join(str(p) for p in parts))
            counts = s.counts
            lines.append(
                f"  -- {counts[PASS]} pass, {counts[FAIL]} fail, {counts[FLAGGED]} flagged"
            )
        counts = self.counts
        lines.append(
            f"TOTAL: {counts[PASS]} pass, {counts[FAIL]} fail, {counts[FLAGGED]} flagged"
        )
        return "\n".join(lines)


def dump_json(obj: dict, full_precision: bool = False) -> str:
    """Deterministic JSON: sorted keys, fixed float formatting."""

    def walk(v):
        if isinstance(v, float):
            return fmt_float(v, full_precision)
        if isinstance(v, dict):
            return {k: walk(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [walk(x) for x in v]
        return v

    return json.dumps(walk(obj), sort_keys=True, indent=2)
