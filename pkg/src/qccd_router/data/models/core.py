"""Core shared types used across all modules."""

from __future__ import annotations

from typing import TypeAlias

TrapId: TypeAlias = int
JunctionId: TypeAlias = int
QubitId: TypeAlias = int
GateId: TypeAlias = int

TrapPath: TypeAlias = tuple[TrapId, ...]
"""A sequence of adjacent traps, endpoints included."""
