"""Verification reports: an ordered list of exact sub-check records.

A report body is deterministic for fixed inputs and seed.  The wall-clock
duration is tracked but only emitted when explicitly requested.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

STATUSES = ("verified", "refuted", "evidence", "hypotheses_not_met", "not_checked")

# exit code per status; the worst status of a run decides the process exit code
EXIT_CODES = {"verified": 0, "refuted": 1, "evidence": 3, "hypotheses_not_met": 3, "not_checked": 3}


class ReportError(RuntimeError):
    pass


def canon(x):
    """Canonical JSON-ready form of an exact value."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): canon(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [canon(v) for v in x]
    return str(x)


@dataclass
class Step:
    description: str
    values: dict = field(default_factory=dict)
    ok: bool | None = True
    kind: str = "check"  # check, witness, note

    def to_dict(self) -> dict:
        return {"description": self.description, "kind": self.kind, "ok": self.ok,
                "values": canon(self.values)}


@dataclass
class VerificationReport:
    claim_id: str
    params: dict = field(default_factory=dict)
    status: str = "verified"
    steps: list[Step] = field(default_factory=list)
    seed: int | None = None
    duration_ms: int = 0
    _t0: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def check(self, description: str, ok: bool, **values) -> bool:
        self.steps.append(Step(description, values, bool(ok), "check"))
        return bool(ok)

    def note(self, description: str, **values):
        self.steps.append(Step(description, values, None, "note"))

    def witness(self, description: str, **values):
        self.steps.append(Step(description, values, False, "witness"))

    def all_ok(self) -> bool:
        return all(s.ok is not False for s in self.steps if s.kind == "check")

    def failed(self) -> list[Step]:
        return [s for s in self.steps if s.kind == "check" and s.ok is False]

    def finish(self, status: str | None = None) -> "VerificationReport":
        """Set the status (default: verified iff every check passed) and stop the clock."""
        if status is None:
            status = "verified" if self.all_ok() else "refuted"
        if status not in STATUSES:
            raise ReportError(f"unknown status {status!r}")
        if status == "refuted" and not any(s.kind == "witness" for s in self.steps):
            bad = self.failed()
            if bad:
                # a failed exact check is its own witness
                s = bad[0]
                self.witness(f"failed check: {s.description}", **s.values)
            else:
                raise ReportError("refuted report needs a witness step")
        if status == "verified" and not self.all_ok():
            raise ReportError("verified report contains failed checks")
        self.status = status
        self.duration_ms = int((time.perf_counter() - self._t0) * 1000)
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self, timing: bool = False) -> dict:
        d = {"claim_id": self.claim_id, "params": canon(self.params), "status": self.status,
             "steps": [s.to_dict() for s in self.steps]}
        if self.seed is not None:
            d["seed"] = self.seed
        if timing:
            d["duration_ms"] = self.duration_ms
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self, timing: bool = False) -> str:
        lines = [f"claim   {self.claim_id}"]
        if self.params:
            lines.append("params  " + " ".join(f"{k}={_flat(v)}"
                                               for k, v in sorted(canon(self.params).items())))
        if self.seed is not None:
            lines.append(f"seed    {self.seed}")
        width = max((len(s.description) for s in self.steps), default=0)
        for s in self.steps:
            mark = {"check": "ok  " if s.ok else "FAIL", "note": "note",
                    "witness": "WIT "}[s.kind]
            vals = "; ".join(f"{k}={_flat(v)}" for k, v in sorted(canon(s.values).items()))
            lines.append(f"  [{mark}] {s.description.ljust(width)}  {vals}".rstrip())
        lines.append(f"status  {self.status}")
        if timing:
            lines.append(f"time    {self.duration_ms} ms")
        return "\n".join(lines)


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_flat(x)}" for k, x in sorted(v.items())) + "}"
    return str(v)


def emit(reports, fmt: str = "json", timing: bool = False) -> str:
    """Serialize one report or a list of them."""
    if isinstance(reports, VerificationReport):
        reports = [reports]
    if fmt == "json":
        if len(reports) == 1:
            return reports[0].to_json(timing) + "\n"
        body = [r.to_dict(timing) for r in reports]
        return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "text":
        return "\n\n".join(r.to_text(timing) for r in reports) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def combined_exit_code(reports) -> int:
    if isinstance(reports, VerificationReport):
        reports = [reports]
    codes = {r.exit_code for r in reports}
    if 1 in codes:
        return 1
    if 3 in codes:
        return 3
    return 0
