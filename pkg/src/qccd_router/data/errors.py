"""Exception hierarchy and error message constants."""

from __future__ import annotations


class QccdRouterError(Exception):
    """Base class for every error raised by the package."""


class InvalidArgumentError(QccdRouterError, ValueError):
    """An argument is outside the documented domain of an operation."""


class CapacityError(QccdRouterError):
    """Qubits do not fit the machine, or a move would overfill a trap."""


class CircuitParseError(QccdRouterError):
    """The circuit source does not conform to the supported QASM subset."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class RoutingError(QccdRouterError):
    """The routing loop cannot make progress."""


class ShuttleInvariantError(QccdRouterError):
    """A shuttle round would violate a machine invariant that upstream planning must prevent."""


class TraceValidationError(QccdRouterError):
    """Replaying a trace violated a named invariant."""

    def __init__(self, invariant: str, message: str) -> None:
        super().__init__(f"[{invariant}] {message}")
        self.invariant = invariant


class ConfigError(QccdRouterError):
    """The run configuration is missing, malformed or inconsistent."""


class ErrorMessages:
    EMPTY_TOPOLOGY = "Machine needs at least one trap"
    DISCONNECTED_TOPOLOGY = "Machine graph must be connected"
    WEIGHTS_AND_SWEEP = "Config must define exactly one of [weights] or [sweep]"
    MISSING_QREG = "Gate used before any qreg declaration"
    SECOND_QREG = "Only one qreg declaration is supported"
    MALFORMED_HEADER = "Malformed OPENQASM header, expected 'OPENQASM 2.0;'"
    NO_PROGRESS = "No gate can be committed: every candidate is blocked by full traps"

    @staticmethod
    def positive(name: str, value: object) -> str:
        return f"'{name}' must be >= 1, got {value}"

    @staticmethod
    def at_least(name: str, minimum: int, value: object) -> str:
        return f"'{name}' must be >= {minimum}, got {value}"

    @staticmethod
    def must_be_even(name: str, value: object) -> str:
        return f"'{name}' must be even, got {value}"

    @staticmethod
    def unknown_trap(trap: int) -> str:
        return f"Trap {trap} does not exist"

    @staticmethod
    def unknown_gate(name: str) -> str:
        return f"Unsupported gate '{name}'"

    @staticmethod
    def qubit_out_of_range(index: int, size: int) -> str:
        return f"Qubit index {index} is out of range for qreg of size {size}"

    @staticmethod
    def insufficient_capacity(qubits: int, capacity: int) -> str:
        return f"{qubits} qubits do not fit a machine with total capacity {capacity}"

    @staticmethod
    def trap_overfull(trap: int, occupancy: int, capacity: int) -> str:
        return f"Trap {trap} would hold {occupancy} ions but its capacity is {capacity}"

    @staticmethod
    def file_not_found(path: str) -> str:
        return f"File not found: {path}"
