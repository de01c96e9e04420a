"""Plain-text verification reports with a JSON-friendly summary."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass
class CheckLine:
    name: str
    status: str            # PASS, FAIL or NONINVERTIBLE
    detail: str = ""

    def __str__(self):
        tail = f"  {self.detail}" if self.detail else ""
        return f"{self.status:<13} {self.name}{tail}"


@dataclass
class Report:
    title: str
    lines: List[CheckLine] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(l.status == "PASS" for l in self.lines)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.lines.append(CheckLine(name, "PASS" if ok else "FAIL", "" if ok else detail))
        return ok

    def extend(self, other: "Report"):
        self.lines.extend(other.lines)

    def failures(self) -> List[CheckLine]:
        return [l for l in self.lines if l.status != "PASS"]

    def text(self) -> str:
        return "\n".join([f"== {self.title}"] + [str(l) for l in self.lines])

    def summary(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": l.name, "status": l.status, "detail": l.detail} for l in self.lines],
        }
