from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    identity: str
    n: int
    passed: bool
    lhs: object
    rhs: object

    def line(self) -> str:
        mark = "ok  " if self.passed else "FAIL"
        return f"{mark} {self.identity} n={self.n}: {self.lhs} vs {self.rhs}"


@dataclass
class IdentityReport:
    suite: str
    n_min: int
    n_max: int
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def first_failure(self) -> Check | None:
        fails = self.failures
        return fails[0] if fails else None

    def add(self, identity: str, n: int, lhs: object, rhs: object) -> None:
        self.checks.append(Check(identity, n, lhs == rhs, lhs, rhs))

    def sort(self) -> IdentityReport:
        self.checks.sort(key=lambda c: (c.identity, c.n))
        return self

    def summary(self) -> str:
        status = "PASS" if self.all_passed else "FAIL"
        return (f"{status} {self.suite} [{self.n_min}..{self.n_max}] "
                f"{len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed")

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "range": [self.n_min, self.n_max],
            "allPassed": self.all_passed,
            "checks": len(self.checks),
            "skipped": list(self.skipped),
            "failures": [
                {"identity": c.identity, "n": c.n, "lhs": str(c.lhs), "rhs": str(c.rhs)}
                for c in self.failures
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def merge(suite: str, reports: list[IdentityReport]) -> IdentityReport:
    out = IdentityReport(suite, min(r.n_min for r in reports), max(r.n_max for r in reports))
    for r in reports:
        out.checks.extend(Check(f"{r.suite}: {c.identity}", c.n, c.passed, c.lhs, c.rhs) for c in r.checks)
        out.skipped.extend(r.skipped)
    return out
