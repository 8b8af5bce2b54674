"""Shared pytest plumbing: the acceptance-criterion result table.

test_acceptance.py records one entry per criterion; the terminal summary
prints one pass/fail line each so the gate status is readable at a glance.
"""

from dataclasses import dataclass
from typing import List


@dataclass(frozen=True)
class CriterionResult:
    index: int
    description: str
    passed: bool
    seconds: float


ACCEPTANCE_RESULTS: List[CriterionResult] = []


def record_criterion(index: int, description: str, passed: bool, seconds: float) -> None:
    ACCEPTANCE_RESULTS.append(CriterionResult(index, description, passed, seconds))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for res in sorted(ACCEPTANCE_RESULTS, key=lambda r: r.index):
        status = "PASS" if res.passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {res.index:2d} [{status}] ({res.seconds:6.2f}s) {res.description}"
        )
