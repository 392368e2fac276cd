"""Deterministic text renderings of integer tables.

Cells are ints, strings or None. None marks a structural zero: it is
printed blank in plain format and as 0 in csv and json. JSON encodes
numbers as decimal strings so arbitrarily large entries survive.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, List, Optional, Sequence

Cell = Any
Table = Sequence[Sequence[Cell]]


def _text(cell: Cell, blank: str = "") -> str:
    if cell is None:
        return blank
    return str(cell)


def render_plain(rows: Table, header: Optional[Sequence[str]] = None) -> str:
    """Right-aligned columns separated by two spaces."""
    lines = [list(header)] if header else []
    lines += [[_text(c) for c in row] for row in rows]
    if not lines:
        return ""
    width = max(len(line) for line in lines)
    widths = [max((len(line[k]) for line in lines if k < len(line)), default=0) for k in range(width)]
    out = []
    for line in lines:
        cells = [line[k].rjust(widths[k]) if k < len(line) else " " * widths[k] for k in range(width)]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def render_csv(rows: Table, header: Optional[Sequence[str]] = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(header)
    for row in rows:
        writer.writerow([_text(c, "0") for c in row])
    return buf.getvalue()


def render_json(rows: Table, name: str, header: Optional[Sequence[str]] = None) -> str:
    payload = {"object": name, "rows": [[_text(c, "0") for c in row] for row in rows]}
    if header:
        payload["header"] = list(header)
    return json.dumps(payload, indent=2) + "\n"


def render(rows: Table, fmt: str, name: str = "", header: Optional[Sequence[str]] = None) -> str:
    """Render in plain, csv or json.

    Raises:
        ValueError: for an unknown format
    """
    if fmt == "plain":
        return render_plain(rows, header)
    if fmt == "csv":
        return render_csv(rows, header)
    if fmt == "json":
        return render_json(rows, name, header)
    raise ValueError(f"unknown format {fmt!r}")


def parse_json_table(text: str) -> List[List[Any]]:
    """Inverse of render_json for numeric tables: decimal strings back to int or Fraction."""
    payload = json.loads(text)
    parsed = []
    for row in payload["rows"]:
        parsed.append([Fraction(c) if "/" in c else int(c) for c in row])
    return parsed
