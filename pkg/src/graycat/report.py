"""Validation reports shared by every validator in the package.

A report is a flat, ordered list of violations.  Each violation names the
axiom family it belongs to, the cells involved, and a human-readable
description of the failing pasting.  Structural problems (missing table
entries, dangling ids, boundary mismatches) use families prefixed with
``structure/`` so they can be told apart from genuine axiom failures.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    family: str
    cells: tuple[str, ...]
    detail: str

    def key(self) -> tuple:
        return (self.family, self.cells, self.detail)


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, family: str, cells, detail: str) -> None:
        self.violations.append(Violation(family, tuple(str(c) for c in cells), detail))

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            fam = f"{prefix}{v.family}" if prefix else v.family
            self.violations.append(Violation(fam, v.cells, v.detail))

    def families(self) -> list[str]:
        return sorted({v.family for v in self.violations})

    def sorted(self) -> "ValidationReport":
        rep = ValidationReport(sorted(self.violations, key=Violation.key), self.seconds)
        return rep

    def is_structural(self) -> bool:
        return any(v.family.startswith("structure/") for v in self.violations)


class timer:
    """Context manager stamping elapsed wall time onto a report."""

    def __init__(self, report: ValidationReport):
        self.report = report

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self._t0
        return False
