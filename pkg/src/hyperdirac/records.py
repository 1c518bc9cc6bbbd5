"""Tabular output shared by the CLI: one schema, CSV or JSON on disk.

CSV layout::

    # schema_version: 1
    # command: spectrum
    # parameters: {"B": 5.0, ...}
    variant,m,n,lambda_sq,constraint_margin
    3,0.5,1,9,4

Floats are written with 17 significant digits, so a CSV file parses back
into exactly the same record as its JSON twin.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"


def _cell(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return str(value)
        out = format(value, ".17g")
        # keep integral floats recognizable as floats on the way back
        return out if any(c in out for c in ".e") else out + ".0"
    return str(value)


def _parse(text: str):
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def add(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"row has {len(values)} values, expected {len(self.columns)}")
        self.rows.append(list(values))

    def to_json(self) -> str:
        doc = {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "columns": self.columns,
            "rows": [dict(zip(self.columns, row)) for row in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# schema_version: {self.schema_version}\n")
        buf.write(f"# command: {self.command}\n")
        buf.write(f"# parameters: {json.dumps(self.parameters)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        doc = json.loads(text)
        cols = doc["columns"]
        rows = [[row[c] for c in cols] for row in doc["rows"]]
        return cls(doc["command"], doc["parameters"], cols, rows, doc["schema_version"])

    @classmethod
    def from_csv(cls, text: str) -> "OutputRecord":
        meta, body = {}, []
        for line in text.splitlines(keepends=True):
            if line.startswith("# ") and not body:
                key, _, value = line[2:].rstrip("\n").partition(": ")
                meta[key] = value
            else:
                body.append(line)
        reader = csv.reader(io.StringIO("".join(body)))
        cols = next(reader)
        rows = [[_parse(c) for c in row] for row in reader]
        return cls(meta["command"], json.loads(meta["parameters"]), cols, rows, meta["schema_version"])
