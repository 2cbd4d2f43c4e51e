"""Run configuration: a TOML document validated into pydantic models.

Sections: ``[topology]``, ``[circuit]``, exactly one of ``[weights]`` / ``[sweep]``,
optional ``[physics]`` and ``[output]``, plus top-level ``seed`` and ``placement``.

Usage:
    from qccd_router.config.run_config import load_run_config

    config = load_run_config(Path("runs/qft16.toml"))
    machine = config.topology.build()
"""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from qccd_router.circuit.generators import generate_benchmark
from qccd_router.circuit.qasm_parser import parse_circuit_file
from qccd_router.config.env import DEFAULT_OUT_DIR, DEFAULT_SEED
from qccd_router.data.benchmarks import Benchmark
from qccd_router.data.errors import ConfigError, ErrorMessages, InvalidArgumentError
from qccd_router.data.models.circuit import Circuit
from qccd_router.data.models.core import TrapId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.physics import PhysicsParams
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.models.sweep import StagePlan
from qccd_router.data.modes import PlacementStrategy
from qccd_router.data.topology_kind import TopologyKind
from qccd_router.topology.builders import build_custom, build_grid, build_linear, build_ring


class TopologyConfig(BaseModel):
    """Either a regular device (``kind`` + dimensions + ``capacity``) or a custom trap list."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: TopologyKind
    traps: int | None = Field(default=None, ge=1)
    rows: int | None = Field(default=None, ge=1)
    cols: int | None = Field(default=None, ge=1)
    capacity: int | None = Field(default=None, ge=1)
    capacities: list[int] | None = None
    links: list[tuple[TrapId, TrapId]] | None = None

    @model_validator(mode="after")
    def _dimensions_present(self) -> Self:
        if self.kind is TopologyKind.CUSTOM:
            if self.capacities is None or self.links is None:
                raise ValueError("custom topology needs 'capacities' and 'links'")
        elif self.capacity is None:
            raise ValueError(f"{self.kind} topology needs 'capacity'")
        elif self.kind is TopologyKind.GRID and (self.rows is None or self.cols is None):
            raise ValueError("grid topology needs 'rows' and 'cols'")
        elif self.kind in (TopologyKind.LINEAR, TopologyKind.RING) and self.traps is None:
            raise ValueError(f"{self.kind} topology needs 'traps'")
        return self

    @classmethod
    def parse(cls, text: str) -> TopologyConfig:
        """Parse the short form ``linear:8x6``, ``ring:8x6`` or ``grid:2x4x6`` (last number is capacity)."""
        kind_name, _, dims_text = text.strip().partition(":")
        try:
            kind = TopologyKind(kind_name.lower())
            dims = [int(d) for d in dims_text.lower().split("x")]
        except ValueError:
            raise InvalidArgumentError(f"Malformed topology '{text}', expected e.g. 'linear:8x6'") from None
        expected = 3 if kind is TopologyKind.GRID else 2
        if kind is TopologyKind.CUSTOM or len(dims) != expected:
            raise InvalidArgumentError(f"Malformed topology '{text}', expected e.g. 'linear:8x6' or 'grid:2x4x6'")
        if kind is TopologyKind.GRID:
            return cls(kind=kind, rows=dims[0], cols=dims[1], capacity=dims[2])
        return cls(kind=kind, traps=dims[0], capacity=dims[1])

    @property
    def label(self) -> str:
        match self.kind:
            case TopologyKind.GRID:
                return f"grid:{self.rows}x{self.cols}x{self.capacity}"
            case TopologyKind.CUSTOM:
                return f"custom:{len(self.capacities or [])}"
            case _:
                return f"{self.kind}:{self.traps}x{self.capacity}"

    def build(self) -> MachineGraph:
        match self.kind:
            case TopologyKind.LINEAR:
                return build_linear(self.traps or 0, self.capacity or 0)
            case TopologyKind.RING:
                return build_ring(self.traps or 0, self.capacity or 0)
            case TopologyKind.GRID:
                return build_grid(self.rows or 0, self.cols or 0, self.capacity or 0)
            case TopologyKind.CUSTOM:
                return build_custom(self.capacities or [], self.links or [])


class CircuitConfig(BaseModel):
    """A QASM ``file`` or a ``generator`` name with ``n_qubits``; ``seed`` feeds random presets."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    file: Path | None = None
    generator: Benchmark | None = None
    n_qubits: int | None = Field(default=None, ge=1)
    seed: int | None = None

    @model_validator(mode="after")
    def _one_source(self) -> Self:
        if (self.file is None) == (self.generator is None):
            raise ValueError("circuit needs exactly one of 'file' or 'generator'")
        if self.generator is not None and self.n_qubits is None:
            raise ValueError("circuit generator needs 'n_qubits'")
        return self

    def load(self, default_seed: int = 0, base_dir: Path | None = None) -> Circuit:
        if self.file is not None:
            path = self.file if self.file.is_absolute() or base_dir is None else base_dir / self.file
            return parse_circuit_file(path)
        assert self.generator is not None and self.n_qubits is not None
        return generate_benchmark(self.generator, self.n_qubits, self.seed if self.seed is not None else default_seed)


class OutputConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    out_dir: Path = Path(DEFAULT_OUT_DIR)


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    topology: TopologyConfig
    circuit: CircuitConfig
    weights: ScoreWeights | None = None
    sweep: StagePlan | None = None
    physics: PhysicsParams = Field(default_factory=PhysicsParams)
    output: OutputConfig = Field(default_factory=OutputConfig)
    placement: PlacementStrategy = PlacementStrategy.SEQUENTIAL
    seed: int = DEFAULT_SEED

    @model_validator(mode="after")
    def _weights_or_sweep(self) -> Self:
        if (self.weights is None) == (self.sweep is None):
            raise ValueError(ErrorMessages.WEIGHTS_AND_SWEEP)
        return self

    def require_weights(self) -> ScoreWeights:
        if self.weights is None:
            raise ConfigError("This command needs a [weights] section")
        return self.weights

    def require_sweep(self) -> StagePlan:
        if self.sweep is None:
            raise ConfigError("This command needs a [sweep] section")
        return self.sweep

    def with_overrides(self, *, seed: int | None = None, out_dir: Path | None = None) -> RunConfig:
        """Apply command-line ``--seed`` / ``--out-dir`` overrides."""
        update: dict[str, object] = {}
        if seed is not None:
            update["seed"] = seed
        if out_dir is not None:
            update["output"] = OutputConfig(out_dir=out_dir)
        return self.model_copy(update=update)


def _format_errors(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(p) for p in error["loc"]) or "<root>"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def parse_run_config(text: str, source: str = "<string>") -> RunConfig:
    """Validate a TOML document.

    Raises:
        ConfigError: malformed TOML or a document that fails validation.
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{source}: invalid TOML: {exc}") from None
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"{source}: {_format_errors(exc)}") from None


def load_run_config(path: Path) -> RunConfig:
    """Read and validate the run config at *path*; a missing file raises ``FileNotFoundError``."""
    if not path.is_file():
        raise FileNotFoundError(ErrorMessages.file_not_found(str(path)))
    return parse_run_config(path.read_text(encoding="utf-8"), str(path))
