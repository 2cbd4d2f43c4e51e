"""JSON Schema of best.json, the sweep summary."""

from typing import Any

from qccd_router.data.schemas.core_schema import METRICS_SCHEMA, NON_NEGATIVE_INT, WEIGHTS_SCHEMA

STAGE_SUMMARY_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "stage": {"type": "string"},
        "evaluations": NON_NEGATIVE_INT,
        "best_fidelity": {"type": "number"},
        "no_impact": {"type": "boolean"},
    },
    "required": ["stage", "evaluations", "best_fidelity", "no_impact"],
}

BEST_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "seed": {"type": "integer"},
        "weights": WEIGHTS_SCHEMA,
        "metrics": {"oneOf": [METRICS_SCHEMA, {"type": "null"}]},
        "stages": {"type": "array", "items": STAGE_SUMMARY_SCHEMA},
    },
    "required": ["seed", "weights", "metrics", "stages"],
}
