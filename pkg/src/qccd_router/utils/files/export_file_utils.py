"""Read back the artifacts the CLI writes, CSV or JSON by file extension."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from qccd_router.data.errors import ErrorMessages
from qccd_router.utils.files.csv_utils import CsvRecord, parse_csv_to_records


def read_json_artifact(path: Path) -> Any:
    """Parse a JSON artifact; ``Infinity`` literals written for unbounded thresholds are accepted."""
    if not path.is_file():
        raise FileNotFoundError(ErrorMessages.file_not_found(str(path)))
    return json.loads(path.read_text(encoding="utf-8"))


def read_csv_artifact(path: Path) -> list[CsvRecord]:
    if not path.is_file():
        raise FileNotFoundError(ErrorMessages.file_not_found(str(path)))
    return parse_csv_to_records(path.read_text(encoding="utf-8"))


def read_artifact(path: Path) -> dict[str, object]:
    """Return ``{"format", "file_path", "data"}`` with CSV rows or the parsed JSON document."""
    if path.suffix.lower() == ".json":
        return {"format": "json", "file_path": str(path), "data": read_json_artifact(path)}
    return {"format": "csv", "file_path": str(path), "data": read_csv_artifact(path)}
