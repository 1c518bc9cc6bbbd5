"""Shared helpers for the experiment scripts."""

import os
from pathlib import Path

from hyperdirac.records import OutputRecord


def write(record: OutputRecord, name: str) -> Path:
    out = Path(os.environ.get("OUTPUT_DIR", "results"))
    out.mkdir(parents=True, exist_ok=True)
    path = out / name
    path.write_text(record.to_csv())
    return path
