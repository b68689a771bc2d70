"""Check reports shared by every axiom checker and by the command line."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witnesses: list[Any] = field(default_factory=list)
    residual: float | None = None
    note: str = ""


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def add(self, name: str, witnesses=(), residual=None, passed=None, note="") -> Check:
        witnesses = list(witnesses)
        if passed is None:
            passed = not witnesses
        chk = Check(name, bool(passed), witnesses, residual, note)
        self.checks.append(chk)
        return chk

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witnesses, c.residual, c.note))

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "verdict": self.verdict,
                "checks": [asdict(c) for c in self.checks], "data": self.data}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["subject"], [Check(**c) for c in d["checks"]], dict(d.get("data", {})))

    @classmethod
    def from_json(cls, s: str) -> "Report":
        return cls.from_dict(json.loads(s))

    def render(self, max_witnesses: int = 3) -> str:
        lines = [f"{self.subject}: {self.verdict.upper()}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = f"  residual={c.residual:.3g}" if c.residual is not None else ""
            note = f"  ({c.note})" if c.note else ""
            lines.append(f"  [{mark}] {c.name}{extra}{note}")
            if not c.passed:
                for w in c.witnesses[:max_witnesses]:
                    lines.append(f"         witness: {w}")
                if len(c.witnesses) > max_witnesses:
                    lines.append(f"         ... {len(c.witnesses) - max_witnesses} more")
        return "\n".join(lines)

    __str__ = render


class AxiomError(ValueError):
    """An input failed a required axiom check; the failing report is attached."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
