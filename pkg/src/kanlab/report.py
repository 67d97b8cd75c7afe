"""A tiny container for check results: a list of violations, empty means pass."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Report:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        return [str(v) for v in self.violations]

    def first(self):
        return self.violations[0] if self.violations else None

    def __str__(self) -> str:
        return "OK" if self.ok else "\n".join(self.lines())
