"""Circuit structure metrics: depth, two-qubit gate count and the movement-per-time-step ratio."""

from __future__ import annotations

from qccd_router.circuit.gate_dag import GateDag
from qccd_router.data.models.circuit import CircuitMetrics
from qccd_router.data.models.core import QubitId


def movement_per_qubit(dag: GateDag) -> dict[QubitId, int]:
    """Partner changes per qubit over its two-qubit gates in program order.

    A qubit's first partner is not a movement: the initial placement can always co-locate it.
    """
    counts: dict[QubitId, int] = {q: 0 for q in range(dag.n_qubits)}
    previous: dict[QubitId, QubitId] = {}
    for gate in dag.gates:
        if not gate.is_two_qubit:
            continue
        for qubit in gate.qubits:
            partner = gate.partner(qubit)
            if qubit in previous and previous[qubit] != partner:
                counts[qubit] = counts.get(qubit, 0) + 1
            previous[qubit] = partner
    return counts


def compute_metrics(dag: GateDag) -> CircuitMetrics:
    depth = dag.depth
    two_q = sum(1 for g in dag.gates if g.is_two_qubit)
    movements = movement_per_qubit(dag)
    return CircuitMetrics(
        depth=depth,
        two_q_count=two_q,
        avg_2q_per_ts=two_q / depth if depth else 0.0,
        avg_ion_mov_per_ts=sum(movements.values()) / depth if depth else 0.0,
        movement_per_qubit=movements,
    )
