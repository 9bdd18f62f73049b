"""Verification report containers shared by the checking routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of a single grid/sample check.

    margin is signed: positive means the inequality held with room to spare,
    negative means it was violated.  witness locates the worst point (a z in
    (0,1), a pair (x, y), or whatever the check sweeps over).
    """

    name: str
    passed: bool
    margin: float
    witness: object = None
    detail: str = ""
    indeterminate: int = 0  # points where |diff| sat below the float noise floor


@dataclass
class VerificationReport:
    subject: str
    checks: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.checks.append(record)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def worst(self) -> Optional[CheckRecord]:
        if not self.checks:
            return None
        return min(self.checks, key=lambda c: c.margin)

    @property
    def worst_margin(self) -> float:
        w = self.worst
        return float("inf") if w is None else w.margin

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        w = self.worst
        tail = "" if w is None else f" worst={w.margin:.6g} at {w.name} ({w.witness})"
        return f"{self.subject}: {status}{tail}"

    def lines(self) -> list[str]:
        out = [self.summary()]
        for c in self.checks:
            mark = "ok " if c.passed else "BAD"
            extra = f" [{c.detail}]" if c.detail else ""
            out.append(
                f"  {mark} {c.name}: margin={c.margin:.6g} witness={c.witness}{extra}"
            )
        return out

    def csv_rows(self) -> list[tuple]:
        return [
            (c.name, "pass" if c.passed else "fail", repr(c.margin), repr(c.witness))
            for c in self.checks
        ]
