"""Core JSON Schema fragments shared by the artifact schemas."""

from typing import Any

NON_NEGATIVE_INT: dict[str, Any] = {"type": "integer", "minimum": 0}

QUBIT_LIST_SCHEMA: dict[str, Any] = {"type": "array", "items": NON_NEGATIVE_INT}

OPTIONAL_DURATION_SCHEMA: dict[str, Any] = {"type": ["number", "null"], "minimum": 0}

WEIGHTS_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "alpha_shuttle": {"type": "number", "minimum": 0},
        "lambda_swap": {"type": "number", "minimum": 0},
        "beta_future": {"type": "number", "minimum": 0},
        "sigma_capacity": {"type": "number", "minimum": 0},
        "gamma_parallel": {"type": "number", "minimum": 0},
        "threshold": {"type": "number"},
        "lookahead_layers": {"type": "integer", "minimum": 1},
    },
    "required": [
        "alpha_shuttle",
        "lambda_swap",
        "beta_future",
        "sigma_capacity",
        "gamma_parallel",
        "threshold",
        "lookahead_layers",
    ],
    "additionalProperties": False,
}

METRICS_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "shuttle_count": NON_NEGATIVE_INT,
        "swap_count": NON_NEGATIVE_INT,
        "gate_rounds": NON_NEGATIVE_INT,
        "rounds": NON_NEGATIVE_INT,
        "exec_time_us": {"type": "number", "minimum": 0},
        "gate_fidelity_product": {"type": "number", "minimum": 0, "maximum": 1},
        "coherence_factor": {"type": "number", "minimum": 0, "maximum": 1},
        "total_fidelity": {"type": "number", "minimum": 0, "maximum": 1},
    },
    "required": [
        "shuttle_count",
        "swap_count",
        "gate_rounds",
        "rounds",
        "exec_time_us",
        "gate_fidelity_product",
        "coherence_factor",
        "total_fidelity",
    ],
}
