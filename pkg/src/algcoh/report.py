"""Structured run reports and their text / json / csv renderings.

JSON schema (``schema_version`` 1)::

    {
      "schema_version": 1,
      "command": str,                       # omitted when empty
      "checks": [{"name", "status", "cases", "failures", "detail"}],
      "polynomials": {name: [coeff, ...]},  # coefficient strings, degree 0 first
      "table": {"header": [...], "rows": [[...], ...]},
      "data": {...}                         # command-specific records
    }

Optional keys are omitted when empty.  Keys are sorted and checks are
ordered by name, so equal reports serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .exactalg import UniPoly

SCHEMA_VERSION = 1
FORMATS = ("text", "json", "csv")


class UnsupportedFormat(ValueError):
    pass


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 1
    failures: int = 0
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "cases": self.cases,
            "failures": self.failures,
            "detail": self.detail,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Check":
        return cls(rec["name"], rec["status"] == "PASS", rec["cases"], rec["failures"], rec["detail"])


@dataclass
class Report:
    command: str = ""
    checks: list[Check] = field(default_factory=list)
    polynomials: dict[str, UniPoly] = field(default_factory=dict)
    table: tuple[list[str], list[list[str]]] | None = None
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add_check(self, name: str, passed: bool, cases: int = 1, failures: int | None = None, detail: str = ""):
        if failures is None:
            failures = 0 if passed else 1
        self.checks.append(Check(name, bool(passed), cases, failures, detail))

    def to_record(self) -> dict:
        rec: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "checks": [c.to_record() for c in sorted(self.checks, key=lambda c: c.name)],
        }
        if self.command:
            rec["command"] = self.command
        if self.polynomials:
            rec["polynomials"] = {k: p.to_list() for k, p in self.polynomials.items()}
        if self.table is not None:
            header, rows = self.table
            rec["table"] = {"header": list(header), "rows": [list(r) for r in rows]}
        if self.data:
            rec["data"] = self.data
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "Report":
        if rec.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {rec.get('schema_version')!r}")
        table = None
        if "table" in rec:
            table = (rec["table"]["header"], rec["table"]["rows"])
        return cls(
            command=rec.get("command", ""),
            checks=[Check.from_record(c) for c in rec["checks"]],
            polynomials={k: UniPoly.from_list(v) for k, v in rec.get("polynomials", {}).items()},
            table=table,
            data=rec.get("data", {}),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_record() == other.to_record()


def _render_text(report: Report) -> str:
    lines: list[str] = []
    if report.table is not None:
        header, rows = report.table
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        fmt = "  ".join("{:<%d}" % w for w in widths)
        lines.append(fmt.format(*header).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for row in rows:
            lines.append(fmt.format(*row).rstrip())
    polys = report.polynomials
    if len(polys) == 1 and report.table is None:
        lines.append(next(iter(polys.values())).to_str())
    else:
        width = max((len(k) for k in polys), default=0)
        for name, p in polys.items():
            lines.append(f"{name.ljust(width)} : {p.to_str()}")
    # command-specific records are json only; checks summarize them here
    for c in sorted(report.checks, key=lambda c: c.name):
        line = f"{c.status} {c.name} ({c.cases - c.failures}/{c.cases})"
        if c.detail:
            line += f": {c.detail}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    polys = report.polynomials
    if len(polys) == 1 and not report.checks and report.table is None:
        w.writerow(["degree", "coefficient"])
        for k, c in enumerate(next(iter(polys.values())).to_list()):
            w.writerow([k, c])
        return buf.getvalue()
    w.writerow(["record", "name", "degree", "value"])
    for name, p in polys.items():
        for k, c in enumerate(p.to_list()):
            w.writerow(["poly", name, k, c])
    if report.table is not None:
        header, rows = report.table
        w.writerow(["header", "", "", ";".join(map(str, header))])
        for i, row in enumerate(rows):
            w.writerow(["row", i, "", ";".join(map(str, row))])
    for c in sorted(report.checks, key=lambda c: c.name):
        w.writerow(["check", c.name, "", f"{c.status} {c.cases - c.failures}/{c.cases}"])
    return buf.getvalue()


def emit_report(report: Report, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_record(), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "text":
        return _render_text(report).encode()
    if fmt == "csv":
        return _render_csv(report).encode()
    raise UnsupportedFormat(f"format must be one of {FORMATS}, got {fmt!r}")
