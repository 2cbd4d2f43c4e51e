"""Builders for the linear, ring and grid trap topologies and for custom devices.

Chain orientation is fixed here: for a junction between traps ``a < b`` the ion leaves
``a`` from its RIGHT end and enters ``b`` at its LEFT end. Rings are oriented along the
cycle instead (predecessor on the LEFT, successor on the RIGHT), so the closing junction
keeps both geometric ends distinct.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from qccd_router.data.errors import ErrorMessages, InvalidArgumentError
from qccd_router.data.models.core import TrapId
from qccd_router.data.models.machine import Junction, MachineGraph, Trap
from qccd_router.data.topology_kind import ChainEnd, TopologyKind


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise InvalidArgumentError(ErrorMessages.positive(name, value))


def _ordered_junctions(pairs: Iterable[tuple[TrapId, TrapId]]) -> tuple[Junction, ...]:
    """Number junctions in sorted pair order with the lower-id / higher-id end rule."""
    normalized = sorted({(min(a, b), max(a, b)) for a, b in pairs})
    return tuple(Junction(idx, (a, b), (ChainEnd.RIGHT, ChainEnd.LEFT)) for idx, (a, b) in enumerate(normalized))


def build_linear(n_traps: int, capacity: int) -> MachineGraph:
    """Path of *n_traps* traps with ``n_traps - 1`` junctions and uniform *capacity*."""
    _check_positive("n_traps", n_traps)
    _check_positive("capacity", capacity)
    traps = tuple(Trap(i, capacity) for i in range(n_traps))
    return MachineGraph(traps, _ordered_junctions((i, i + 1) for i in range(n_traps - 1)), TopologyKind.LINEAR)


def build_ring(n_traps: int, capacity: int) -> MachineGraph:
    """Cycle of *n_traps* traps (at least three), one junction per trap."""
    if n_traps < 3:
        raise InvalidArgumentError(ErrorMessages.at_least("n_traps", 3, n_traps))
    _check_positive("capacity", capacity)
    traps = tuple(Trap(i, capacity) for i in range(n_traps))
    junctions = tuple(
        Junction(i, (i, (i + 1) % n_traps), (ChainEnd.RIGHT, ChainEnd.LEFT)) for i in range(n_traps)
    )
    return MachineGraph(traps, junctions, TopologyKind.RING)


def build_grid(rows: int, cols: int, capacity: int) -> MachineGraph:
    """Row-major ``rows x cols`` lattice with 4-neighbour junctions; trap id = ``r * cols + c``."""
    _check_positive("rows", rows)
    _check_positive("cols", cols)
    _check_positive("capacity", capacity)
    if rows * cols < 2:
        raise InvalidArgumentError(ErrorMessages.at_least("rows * cols", 2, rows * cols))

    pairs: list[tuple[TrapId, TrapId]] = []
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c
            if c + 1 < cols:
                pairs.append((node, node + 1))
            if r + 1 < rows:
                pairs.append((node, node + cols))
    traps = tuple(Trap(i, capacity) for i in range(rows * cols))
    return MachineGraph(traps, _ordered_junctions(pairs), TopologyKind.GRID)


def build_custom(
    capacities: Sequence[int],
    links: Sequence[tuple[TrapId, TrapId]],
    ends: Sequence[tuple[ChainEnd, ChainEnd]] | None = None,
) -> MachineGraph:
    """Irregular device: trap ``i`` has ``capacities[i]``; ``links`` lists junction endpoints.

    Junction ids follow the order of *links*. Without explicit *ends* the lower-id /
    higher-id rule applies.
    """
    if ends is not None and len(ends) != len(links):
        raise InvalidArgumentError("'ends' must list one pair per junction")
    traps = tuple(Trap(i, cap) for i, cap in enumerate(capacities))
    junctions: list[Junction] = []
    for idx, (a, b) in enumerate(links):
        if ends is not None:
            pair_ends = ends[idx]
        else:
            pair_ends = (ChainEnd.RIGHT, ChainEnd.LEFT) if a < b else (ChainEnd.LEFT, ChainEnd.RIGHT)
        junctions.append(Junction(idx, (a, b), pair_ends))
    return MachineGraph(traps, tuple(junctions), TopologyKind.CUSTOM)
