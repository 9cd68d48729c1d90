"""Check reports: named residual records with pass/fail verdicts.

Key classes: CheckResult, Report
"""
from dataclasses import dataclass, field

from config import runtime_settings as settings


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    residual: float
    tol: float
    passed: bool
    detail: str = ""

    def record(self):
        """JSON-ready dict in the report stream layout."""
        return {
            "check": self.name,
            "anchor": self.anchor,
            "residual": self.residual,
            "tol": self.tol,
            "verdict": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


@dataclass
class Report:
    """Ordered list of checks. Order of insertion is the order of emission."""

    title: str
    checks: list = field(default_factory=list)

    def add(self, name, anchor, residual, tol=None, detail=""):
        """Record a residual; the check passes when residual <= tol."""
        if tol is None:
            tol = settings.VERDICT_TOL
        residual = float(residual)
        result = CheckResult(name, anchor, residual, float(tol), residual <= tol, detail)
        self.checks.append(result)
        return result

    def add_flag(self, name, anchor, ok, detail=""):
        """Record a yes/no condition (residual 0 on success, 1 on failure)."""
        return self.add(name, anchor, 0.0 if ok else 1.0, tol=0.5, detail=detail)

    def merge(self, other, prefix=None):
        """Append another report's checks, optionally prefixing their names."""
        for c in other.checks:
            name = f"{prefix}/{c.name}" if prefix else c.name
            self.checks.append(CheckResult(name, c.anchor, c.residual, c.tol, c.passed, c.detail))
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def get(self, name):
        """First check whose name equals or ends with '/name'."""
        for c in self.checks:
            if c.name == name or c.name.endswith("/" + name):
                return c
        raise KeyError(name)

    def records(self, emit_passing=True):
        for c in self.checks:
            if emit_passing or not c.passed:
                rec = c.record()
                rec["report"] = self.title
                yield rec

    def __len__(self):
        return len(self.checks)
