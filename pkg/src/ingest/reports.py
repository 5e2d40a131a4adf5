"""
DGKIT REPORTS

Plain-text command reports with a fixed section order, and their JSON
sidecars. Identical inputs give byte-identical output: nothing here reads
clocks, paths beyond the file name, or unordered containers.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from src.contracts.schemas import CHI_CONVENTION
from src.lattice.intmatrix import IntMatrix

RULE = "═" * 70
THIN = "─" * 70


def format_matrix(rows: Sequence[Sequence[Any]], indent: int = 4) -> list[str]:
    """Right-aligned bracketed rows; an empty matrix prints as '[]'."""
    rows = [[str(x) for x in r] for r in rows]
    if not rows or not rows[0]:
        shape = f"{len(rows)}x0" if rows else "0x0"
        return [" " * indent + f"[] ({shape})"]
    width = max(len(x) for r in rows for x in r)
    return [" " * indent + "[ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in rows]


def format_vectors(vectors: Sequence[Sequence[int]]) -> str:
    if not vectors:
        return "0"
    return "span{" + ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in vectors) + "}"


def mark(ok: bool) -> str:
    return "✓" if ok else "✗"


@dataclass
class Report:
    """Lines for stdout plus the structured payload for --json."""
    command: str
    title: str
    source: str = ""
    lines: list[str] = field(default_factory=list)
    payload: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lines += [RULE, f"  DGKIT — {self.title}", RULE]
        self.lines.append(f"  convention: {CHI_CONVENTION}")
        if self.source:
            self.lines.append(f"  input:      {self.source}")
        self.payload.update({"command": self.command, "input": self.source})

    # ─── Building ─────────────────────────────────────────────────────────────

    def section(self, name: str) -> None:
        self.lines += ["", f"  ─── {name} " + "─" * max(0, 62 - len(name)), ""]

    def line(self, text: str = "") -> None:
        self.lines.append(f"  {text}" if text else "")

    def item(self, key: str, value: Any) -> None:
        self.lines.append(f"  {key + ':':<22}{value}")

    def matrix(self, name: str, m: IntMatrix | Sequence[Sequence[Any]]) -> None:
        rows = m.to_rows() if isinstance(m, IntMatrix) else m
        self.lines.append(f"  {name} =")
        self.lines += format_matrix(rows)

    def record(self, key: str, value: Any) -> None:
        self.payload[key] = value

    def verdict(self, ok: bool, text: str) -> None:
        self.lines += ["", RULE, f"  {mark(ok)} {text}", RULE]
        self.payload["passed"] = ok

    # ─── Output ───────────────────────────────────────────────────────────────

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def digest(self) -> str:
        """SHA-256 over the canonical JSON payload."""
        content = json.dumps(self.payload, sort_keys=True, default=str)
        return hashlib.sha256(content.encode()).hexdigest()

    def to_json(self) -> str:
        document = dict(self.payload)
        document["digest"] = self.digest()
        return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n"
