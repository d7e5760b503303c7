from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum


class Severity(Enum):
    ERROR = "error"
    INFO = "info"


@dataclass(frozen=True, slots=True)
class Finding:
    rule: str
    severity: Severity
    message: str

    def __str__(self) -> str:
        return f"[{self.severity.name}] ({self.rule}) {self.message}"


@dataclass(frozen=True, slots=True)
class FindingsSummary:
    total: int
    errors: int
    infos: int
    rules: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class FindingsReport:
    findings: Sequence[Finding]

    @property
    def has_errors(self) -> bool:
        return any(f.severity is Severity.ERROR for f in self.findings)

    def get_summary(self) -> FindingsSummary:
        errors = sum(1 for f in self.findings if f.severity is Severity.ERROR)
        return FindingsSummary(
            total=len(self.findings),
            errors=errors,
            infos=len(self.findings) - errors,
            rules=tuple(sorted({f.rule for f in self.findings})),
        )

    def filter(
        self,
        rule: str | None = None,
        severity: Severity | None = None,
    ) -> "FindingsReport":
        filtered = list(self.findings)

        if rule is not None:
            filtered = [f for f in filtered if f.rule == rule]

        if severity is not None:
            filtered = [f for f in filtered if f.severity is severity]

        return FindingsReport(findings=filtered)

    def group_by(self, key: Callable[[Finding], str]) -> dict[str, "FindingsReport"]:
        groups: dict[str, list[Finding]] = {}

        for finding in self.findings:
            groups.setdefault(key(finding), []).append(finding)

        return {k: FindingsReport(findings=v) for k, v in groups.items()}
