"""Check reports produced by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .errors import CheckFailed


class CheckStatus(Enum):
    """Outcome of a check."""
    PASSED = "passed"
    FAILED = "failed"
    NOT_TESTED = "not tested"


@dataclass(frozen=True)
class Failure:
    """A located counterexample."""
    where: str
    expected: Any = None
    got: Any = None

    def __str__(self) -> str:
        if self.expected is None and self.got is None:
            return self.where
        return f"{self.where}: expected {self.expected}, got {self.got}"


@dataclass
class CheckReport:
    """Result of one verification.

    Attributes:
        name: Short identifier of the check (e.g. "gf_check_chebyshev")
        anchor: Statement being verified, in words
        checked: Number of elementary comparisons performed
        failures: Located counterexamples, first one first
        status: PASSED, FAILED or NOT_TESTED
    """

    name: str
    anchor: str = ""
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    status: CheckStatus = CheckStatus.PASSED
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    def tick(self, count: int = 1) -> None:
        self.checked += count

    def fail(self, where: str, expected: Any = None, got: Any = None) -> None:
        self.failures.append(Failure(where, expected, got))
        self.status = CheckStatus.FAILED

    def expect_equal(self, where: str, expected: Any, got: Any) -> bool:
        """Compare and record; returns True on equality."""
        self.checked += 1
        if expected != got:
            self.fail(where, expected, got)
            return False
        return True

    def merge(self, other: CheckReport) -> None:
        self.checked += other.checked
        for failure in other.failures:
            self.fail(f"{other.name}: {failure.where}", failure.expected, failure.got)
        self.notes.extend(other.notes)

    def finish(self) -> CheckReport:
        """Return self if passing, raise CheckFailed otherwise."""
        if self.status is CheckStatus.FAILED:
            raise CheckFailed(self)
        return self

    def summary(self) -> str:
        if self.passed:
            return f"{self.name}: pass ({self.checked} comparisons)"
        if self.status is CheckStatus.NOT_TESTED:
            return f"{self.name}: not tested"
        return f"{self.name}: FAIL at {self.failures[0]}"
