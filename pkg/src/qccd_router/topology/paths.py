"""Shortest-path queries over the trap graph."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from itertools import islice

import networkx as nx

from qccd_router.data.errors import ErrorMessages, InvalidArgumentError
from qccd_router.data.models.core import TrapId, TrapPath
from qccd_router.data.models.machine import MachineGraph

MAX_SHORTEST_PATHS = 32


def _lexicographic_paths(graph: nx.Graph, a: TrapId, distance_to_b: dict[TrapId, int]) -> Iterator[TrapPath]:
    """Depth-first walk from *a* that only steps one hop closer to the target each time.

    Neighbours are visited in ascending id order, so paths come out in lexicographic order.
    """
    stack: list[tuple[TrapId, ...]] = [(a,)]
    while stack:
        path = stack.pop()
        node = path[-1]
        remaining = distance_to_b[node]
        if remaining == 0:
            yield path
            continue
        closer = [n for n in sorted(graph.neighbors(node)) if distance_to_b.get(n) == remaining - 1]
        # reversed so the smallest neighbour is popped first
        stack.extend(path + (n,) for n in reversed(closer))


def all_shortest_paths(machine: MachineGraph, a: TrapId, b: TrapId, limit: int = MAX_SHORTEST_PATHS) -> list[TrapPath]:
    """All minimal-hop trap sequences from *a* to *b*, lexicographic, capped at *limit*."""
    for trap in (a, b):
        if not machine.has_trap(trap):
            raise InvalidArgumentError(ErrorMessages.unknown_trap(trap))
    if a == b:
        return [(a,)]
    distance_to_b: dict[TrapId, int] = nx.single_source_shortest_path_length(machine.graph, b)
    return list(islice(_lexicographic_paths(machine.graph, a, distance_to_b), limit))


def hop_distance(machine: MachineGraph, a: TrapId, b: TrapId) -> int:
    return int(nx.shortest_path_length(machine.graph, a, b))


def paths_to_nearest(
    machine: MachineGraph,
    source: TrapId,
    accept: Callable[[TrapId], bool],
    blocked: frozenset[TrapId] = frozenset(),
    limit: int = MAX_SHORTEST_PATHS,
) -> list[TrapPath]:
    """Shortest paths from *source* to every nearest trap satisfying *accept*.

    The search runs on the trap graph with *blocked* traps removed (the source itself is
    always kept). Returns an empty list when no accepted trap is reachable. Paths are grouped
    by destination in ascending trap id, lexicographic within a destination.
    """
    view = nx.subgraph_view(machine.graph, filter_node=lambda n: n == source or n not in blocked)
    distance_from_source: dict[TrapId, int] = nx.single_source_shortest_path_length(view, source)
    candidates = [t for t, d in distance_from_source.items() if d > 0 and accept(t)]
    if not candidates:
        return []
    nearest = min(distance_from_source[t] for t in candidates)

    paths: list[TrapPath] = []
    for destination in sorted(t for t in candidates if distance_from_source[t] == nearest):
        distance_to_destination: dict[TrapId, int] = nx.single_source_shortest_path_length(view, destination)
        paths.extend(islice(_lexicographic_paths(view, source, distance_to_destination), limit - len(paths)))
        if len(paths) >= limit:
            break
    return paths
