"""CSV reading and writing with the stdlib ``csv`` module.

Floats are written with ``repr`` so a rerun with the same inputs produces identical bytes.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path

CsvRecord = dict[str, str]
CsvValue = str | int | float | bool | None


def format_value(value: CsvValue) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_records(path: Path, fieldnames: Sequence[str], rows: Iterable[Mapping[str, CsvValue]]) -> Path:
    """Write *rows* under a header of *fieldnames*; missing keys become empty cells."""
    path.parent.mkdir(parents=True, exist_ok=True)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({name: format_value(row.get(name)) for name in fieldnames})
    path.write_text(buffer.getvalue(), encoding="utf-8")
    return path


def parse_csv_to_records(text: str) -> list[CsvRecord]:
    """Parse CSV *text* into one dict per non-empty row.

    A leading UTF-8 BOM is stripped.
    """
    text = text.lstrip("\ufeff")
    if not text.strip():
        return []
    reader = csv.DictReader(io.StringIO(text))
    return [
        {key: value for key, value in row.items() if key is not None}
        for row in reader
        if any((value or "").strip() for value in row.values() if isinstance(value, str))
    ]
