"""JSON Schema of trace.json."""

from typing import Any

from qccd_router.data.schemas.core_schema import (
    NON_NEGATIVE_INT,
    OPTIONAL_DURATION_SCHEMA,
    QUBIT_LIST_SCHEMA,
    WEIGHTS_SCHEMA,
)

_CHAIN_END: dict[str, Any] = {"enum": ["left", "right"]}

MACHINE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["linear", "ring", "grid", "custom"]},
        "traps": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "properties": {"id": NON_NEGATIVE_INT, "capacity": {"type": "integer", "minimum": 1}},
                "required": ["id", "capacity"],
            },
        },
        "junctions": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": NON_NEGATIVE_INT,
                    "traps": {"type": "array", "items": NON_NEGATIVE_INT, "minItems": 2, "maxItems": 2},
                    "ends": {"type": "array", "items": _CHAIN_END, "minItems": 2, "maxItems": 2},
                },
                "required": ["id", "traps", "ends"],
            },
        },
    },
    "required": ["kind", "traps", "junctions"],
}

SWAP_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "kind": {"const": "swap"},
        "trap": NON_NEGATIVE_INT,
        "position": NON_NEGATIVE_INT,
        "qubits": {**QUBIT_LIST_SCHEMA, "minItems": 2, "maxItems": 2},
        "duration_us": OPTIONAL_DURATION_SCHEMA,
    },
    "required": ["kind", "trap", "position", "qubits"],
}

SHUTTLE_OP_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "kind": {"const": "shuttle"},
        "op_id": NON_NEGATIVE_INT,
        "qubit": NON_NEGATIVE_INT,
        "from_trap": NON_NEGATIVE_INT,
        "to_trap": NON_NEGATIVE_INT,
        "junction": NON_NEGATIVE_INT,
        "swaps": {"type": "array", "items": SWAP_SCHEMA},
        "duration_us": OPTIONAL_DURATION_SCHEMA,
    },
    "required": ["kind", "op_id", "qubit", "from_trap", "to_trap", "junction", "swaps"],
}

GATE_RECORD_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "kind": {"const": "gate"},
        "gate_id": NON_NEGATIVE_INT,
        "name": {"type": "string"},
        "qubits": {**QUBIT_LIST_SCHEMA, "minItems": 1, "maxItems": 2},
        "trap": NON_NEGATIVE_INT,
        "duration_us": OPTIONAL_DURATION_SCHEMA,
    },
    "required": ["kind", "gate_id", "name", "qubits", "trap"],
}

ROUND_SCHEMA: dict[str, Any] = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "kind": {"const": "shuttle"},
                "index": NON_NEGATIVE_INT,
                "shuttles": {"type": "array", "items": SHUTTLE_OP_SCHEMA},
                "duration_us": OPTIONAL_DURATION_SCHEMA,
            },
            "required": ["kind", "index", "shuttles"],
        },
        {
            "type": "object",
            "properties": {
                "kind": {"const": "gate"},
                "index": NON_NEGATIVE_INT,
                "gates": {"type": "array", "items": GATE_RECORD_SCHEMA},
                "duration_us": OPTIONAL_DURATION_SCHEMA,
            },
            "required": ["kind", "index", "gates"],
        },
    ]
}

TRACE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "version": {"type": "string"},
        "seed": {"type": "integer"},
        "n_qubits": NON_NEGATIVE_INT,
        "machine": MACHINE_SCHEMA,
        "initial_placement": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"trap": NON_NEGATIVE_INT, "ions": QUBIT_LIST_SCHEMA},
                "required": ["trap", "ions"],
            },
        },
        "gates": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": NON_NEGATIVE_INT,
                    "name": {"type": "string"},
                    "qubits": QUBIT_LIST_SCHEMA,
                    "params": {"type": "array", "items": {"type": "number"}},
                },
                "required": ["id", "name", "qubits"],
            },
        },
        "rounds": {"type": "array", "items": ROUND_SCHEMA},
        "weights": {"oneOf": [WEIGHTS_SCHEMA, {"type": "null"}]},
    },
    "required": ["version", "seed", "n_qubits", "machine", "initial_placement", "gates", "rounds"],
}
