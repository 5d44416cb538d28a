"""Pass/fail report returned by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a single verification check.

    `failures` holds whatever identifies the offending cases (indices,
    trial numbers, ...); empty when the check passed.
    """

    name: str
    passed: bool
    max_residual: float
    failures: tuple = field(default_factory=tuple)
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {status} (max residual {self.max_residual:.3e})"
        if self.detail:
            line += f" — {self.detail}"
        return line
