"""Pass/fail rows shared by the exhaustive checkers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRow:
    name: str
    passed: bool
    checked: int
    witness: object = None


@dataclass
class CheckReport:
    window: str
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def row(self, name: str) -> CheckRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)

    def add(self, name: str, checked: int, witness=None) -> CheckRow:
        row = CheckRow(name, witness is None, checked, witness)
        self.rows.append(row)
        return row
