"""Text tables, JSON and CSV for command results."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

__all__ = ["Rendered", "table", "to_json", "to_csv", "render"]


@dataclass
class Rendered:
    """One command result: machine data, a flat table and a human summary."""

    data: dict
    headers: list[str]
    rows: list[list]
    text: str
    exit_code: int = 0
    notes: list[str] = field(default_factory=list)


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def table(headers: list[str], rows: list[list]) -> str:
    cells = [[_cell(v) for v in r] for r in rows]
    widths = [len(h) for h in headers]
    for r in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def to_csv(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def render(result: Rendered, fmt: str) -> str:
    if fmt == "json":
        return to_json(result.data)
    if fmt == "csv":
        return to_csv(result.headers, result.rows)
    text = result.text
    return text if text.endswith("\n") else text + "\n"
