"""Hard JSON Schema checks for artifacts read by the CLI."""

from __future__ import annotations

from typing import Any

import jsonschema

from qccd_router.data.errors import TraceValidationError

SCHEMA_INVARIANT = "schema"


def schema_errors(document: Any, schema: dict[str, Any]) -> list[str]:
    """Every schema violation in *document*, ordered by location."""
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(document), key=lambda e: [str(p) for p in e.absolute_path])
    return [f"{'/'.join(str(p) for p in e.absolute_path) or '<root>'}: {e.message}" for e in errors]


def ensure_matches_schema(document: Any, schema: dict[str, Any], what: str) -> None:
    """Raise :class:`TraceValidationError` naming the first violations of *schema*."""
    errors = schema_errors(document, schema)
    if errors:
        raise TraceValidationError(SCHEMA_INVARIANT, f"{what} does not match its schema: {'; '.join(errors[:5])}")
