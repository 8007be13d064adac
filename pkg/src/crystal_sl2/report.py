"""Pass/fail record shared by the exhaustive checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of an exhaustive check; failures hold serialized counterexamples."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def check(self, condition, counterexample) -> bool:
        self.checked += 1
        if not condition:
            self.failures.append(counterexample() if callable(counterexample) else str(counterexample))
        return bool(condition)

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failures.extend(f"{other.name}: {f}" for f in other.failures)
        return self

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} ({self.checked} checks"
        if self.failures:
            line += f", {len(self.failures)} failures"
        return line + ")"

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": list(self.failures)}
