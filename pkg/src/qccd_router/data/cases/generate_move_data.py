"""Randomised move sets for the shuttle DAG properties."""

from __future__ import annotations

from dataclasses import dataclass

from faker import Faker

from qccd_router.config.env import TEST_DATA_SEED
from qccd_router.data.models.core import QubitId, TrapId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.shuttle.shuttle_dag import Move
from qccd_router.topology.builders import build_grid
from qccd_router.topology.paths import all_shortest_paths

_faker = Faker()
_faker.seed_instance(TEST_DATA_SEED + 1)

# Large enough that any move set of this size stays within capacity
MOVE_GRID_CAPACITY = 24


@dataclass(frozen=True)
class MoveSet:
    machine: MachineGraph
    start: IonConfiguration
    moves: list[Move]

    @property
    def hop_count(self) -> int:
        return sum(len(m.route) - 1 for m in self.moves)


def move_machine() -> MachineGraph:
    return build_grid(3, 3, MOVE_GRID_CAPACITY)


def generate_move_set(machine: MachineGraph | None = None, *, n_qubits: int = 12, max_moves: int = 8) -> MoveSet:
    """Random ions moved along random shortest paths; each move starts where the ion last stopped."""
    machine = machine if machine is not None else move_machine()
    traps = machine.trap_ids
    chains: dict[TrapId, list[QubitId]] = {t: [] for t in traps}
    for qubit in range(n_qubits):
        chains[_faker.random_element(traps)].append(qubit)
    start = IonConfiguration(machine, chains)

    where = {q: start.trap_of(q) for q in range(n_qubits)}
    moves: list[Move] = []
    for _ in range(_faker.random_int(min=1, max=max_moves)):
        qubit = _faker.random_int(min=0, max=n_qubits - 1)
        destination = _faker.random_element([t for t in traps if t != where[qubit]])
        paths = all_shortest_paths(machine, where[qubit], destination)
        moves.append(Move(qubit, _faker.random_element(paths)))
        where[qubit] = destination
    return MoveSet(machine, start, moves)


def generate_move_sets(count: int) -> list[MoveSet]:
    machine = move_machine()
    return [generate_move_set(machine) for _ in range(count)]
