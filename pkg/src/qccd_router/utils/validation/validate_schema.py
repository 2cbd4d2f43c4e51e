"""Soft JSON Schema validation for tests."""

from __future__ import annotations

from typing import Any

import pytest_check as check

from qccd_router.utils.log_utils import log
from qccd_router.utils.validation.schema_check import schema_errors


def validate_json_schema(document: Any, schema: dict[str, Any]) -> None:
    """Soft-assert that *document* matches *schema*, so a test keeps collecting failures."""
    try:
        errors = schema_errors(document, schema)
    except Exception as exc:  # jsonschema.SchemaError and friends
        errors = [f"Invalid schema definition: {exc}"]

    check.is_true(not errors, f"Document should match JSON schema. Errors: {errors}")

    if errors:
        log(f"Data is NOT valid according to the schema. Errors: {errors}")
    else:
        log("Data is valid according to the schema.")
