"""Verification reports."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    name: str
    passed: bool
    witness: dict | None = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing report carries no witness")
        if not self.passed and self.witness is None:
            self.witness = {"reason": "check failed"}

    def to_dict(self, timing: bool = False) -> dict:
        out = {"check": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        if timing:
            out["seconds"] = round(self.elapsed, 6)
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}"
        if self.witness is not None:
            text += f" witness={self.witness}"
        return text


class _Clock:
    elapsed = 0.0


@contextmanager
def timed():
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.elapsed = time.perf_counter() - start


def combine(name: str, reports: list[VerificationReport]) -> VerificationReport:
    """One report that passes iff every part passes; witness is the first failure."""
    failed = [r for r in reports if not r.passed]
    witness = None
    if failed:
        witness = {"part": failed[0].name, **(failed[0].witness or {})}
    return VerificationReport(
        name,
        not failed,
        witness,
        sum(r.elapsed for r in reports),
        {"instances": len(reports), "failed": len(failed)},
    )
