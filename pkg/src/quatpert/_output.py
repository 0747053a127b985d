"""CSV/JSON rendering with atomic writes for the command-line tools.

CSV uses '.' as the decimal separator, no thousands separators and LF line
endings; floats are printed with a fixed number of decimal places.  JSON
carries the same table as {"columns": [...], "rows": [[...]]} with floats
rounded to the same precision.  Output is rendered fully in memory and
written in one step (temp file + rename for paths), so a failing command
never leaves partial output behind.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from dataclasses import dataclass


@dataclass(frozen=True)
class OutputSpec:
    """Format, destination (None = stdout) and decimal places."""

    fmt: str = "csv"
    path: str | None = None
    precision: int = 5

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if not 1 <= self.precision <= 15:
            raise ValueError("precision must be between 1 and 15")


def _csv_cell(value, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value + 0.0:.{precision}f}"
    return str(value)


def _json_cell(value, precision: int):
    if isinstance(value, float):
        return round(value, precision) + 0.0
    return value


def render(spec: OutputSpec, columns: list[str], rows: list[list]) -> str:
    if spec.fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(
            ",".join(_csv_cell(v, spec.precision) for v in row) for row in rows
        )
        return "\n".join(lines) + "\n"
    payload = {
        "columns": columns,
        "rows": [[_json_cell(v, spec.precision) for v in row] for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def write_output(spec: OutputSpec, columns: list[str], rows: list[list]) -> None:
    """Render and emit the table; file writes are atomic (temp + rename)."""
    text = render(spec, columns, rows)
    if spec.path is None or spec.path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(spec.path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".quatpert-")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_path, spec.path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
