"""Structured pass/fail reports for the verification suites.

A report is a named list of checks; each check records its identifier, the
parameters it ran with, and exact expected/actual renderings (never rounded).
The suite passes iff every check passes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    check_id: str
    params: dict
    passed: bool
    expected: str
    actual: str


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, check_id: str, params: dict, passed: bool, expected, actual) -> bool:
        self.checks.append(Check(check_id, dict(params), bool(passed), str(expected), str(actual)))
        return passed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict:
        return {
            "report": self.suite,
            "checks": [
                {
                    "id": c.check_id,
                    "params": c.params,
                    "pass": c.passed,
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.checks
            ],
            "status": self.status,
        }

    def render_text(self) -> str:
        lines = [f"report: {self.suite}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            head = f"  {mark} {c.check_id}" + (f" [{params}]" if params else "")
            lines.append(f"{head} | expected {c.expected} | actual {c.actual}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)


def render_reports_json(reports: list) -> str:
    if len(reports) == 1:
        obj = reports[0].to_json_obj()
    else:
        obj = {
            "report": "all",
            "suites": [r.to_json_obj() for r in reports],
            "status": "pass" if all(r.passed for r in reports) else "fail",
        }
    return json.dumps(obj, indent=2)
