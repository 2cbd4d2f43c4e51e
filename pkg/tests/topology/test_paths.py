"""Shortest-path queries: enumeration, cap, distances and relief paths."""

from __future__ import annotations

import itertools

import allure
import networkx as nx
import pytest

from qccd_router.data.cases.topology_ddt import SHORTEST_PATHS_CASES, PathsCase
from qccd_router.data.errors import InvalidArgumentError
from qccd_router.data.models.machine import MachineGraph
from qccd_router.topology.builders import build_custom, build_grid, build_linear, build_ring
from qccd_router.topology.paths import MAX_SHORTEST_PATHS, all_shortest_paths, hop_distance, paths_to_nearest

# Small devices for the exhaustive comparison against networkx
_SMALL_MACHINES = [
    pytest.param(build_linear(6, 2), id="linear-6"),
    pytest.param(build_ring(7, 2), id="ring-7"),
    pytest.param(build_ring(8, 2), id="ring-8"),
    pytest.param(build_grid(3, 4, 2), id="grid-3x4"),
    pytest.param(build_custom([1] * 6, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 2), (2, 5)]), id="custom-6"),
]


@allure.suite("Topology")
@allure.sub_suite("Shortest paths")
@pytest.mark.topology
class TestShortestPaths:
    """Enumeration of minimal-hop trap sequences."""

    @allure.title("Shortest paths: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", SHORTEST_PATHS_CASES)
    def test_shortest_paths(self, case: PathsCase) -> None:
        assert all_shortest_paths(case.machine(), case.source, case.target) == case.expected

    @allure.title("Every enumerated path is minimal and the set is complete")
    @pytest.mark.regression
    @pytest.mark.parametrize("machine", _SMALL_MACHINES)
    def test_paths_match_breadth_first_search(self, machine: MachineGraph) -> None:
        for a, b in itertools.product(machine.trap_ids, repeat=2):
            paths = all_shortest_paths(machine, a, b)
            expected = sorted(tuple(p) for p in nx.all_shortest_paths(machine.graph, a, b))

            assert paths == expected, f"{a} -> {b}"
            assert {len(p) - 1 for p in paths} == {hop_distance(machine, a, b)}

    @allure.title("Path count is capped and stays lexicographic")
    @pytest.mark.regression
    def test_cap(self) -> None:
        machine = build_grid(5, 5, 1)
        paths = all_shortest_paths(machine, 0, 24)

        assert len(paths) == MAX_SHORTEST_PATHS
        assert paths == sorted(paths)
        assert paths[0] == (0, 1, 2, 3, 4, 9, 14, 19, 24)
        assert all_shortest_paths(machine, 0, 24, limit=3) == paths[:3]

    @allure.title("Unknown trap is rejected")
    @pytest.mark.regression
    def test_unknown_trap(self, linear_2x4: MachineGraph) -> None:
        with pytest.raises(InvalidArgumentError, match="Trap 9"):
            all_shortest_paths(linear_2x4, 0, 9)


@allure.suite("Topology")
@allure.sub_suite("Relief paths")
@pytest.mark.topology
class TestPathsToNearest:
    """Paths from a trap to the nearest accepted traps, avoiding blocked ones."""

    @allure.title("Both ring directions reach equally near free traps")
    @pytest.mark.smoke
    @pytest.mark.regression
    def test_ring_both_sides(self, ring_8x6: MachineGraph) -> None:
        paths = paths_to_nearest(ring_8x6, 0, lambda t: t in {2, 6})

        assert paths == [(0, 1, 2), (0, 7, 6)]

    @allure.title("Blocked traps are routed around")
    @pytest.mark.regression
    def test_blocked(self, ring_8x6: MachineGraph) -> None:
        paths = paths_to_nearest(ring_8x6, 0, lambda t: t == 2, blocked=frozenset({1}))

        assert paths == [(0, 7, 6, 5, 4, 3, 2)]

    @allure.title("Source is never its own destination")
    @pytest.mark.regression
    def test_source_excluded(self, linear_8x6: MachineGraph) -> None:
        assert paths_to_nearest(linear_8x6, 3, lambda t: True) == [(3, 2), (3, 4)]

    @allure.title("Unreachable acceptance yields no path")
    @pytest.mark.regression
    def test_unreachable(self, linear_8x6: MachineGraph) -> None:
        assert paths_to_nearest(linear_8x6, 0, lambda t: t == 5, blocked=frozenset({3})) == []
        assert paths_to_nearest(linear_8x6, 0, lambda t: False) == []
