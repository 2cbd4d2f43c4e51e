"""Weighted trap score and the unweighted bottleneck score."""

from __future__ import annotations

from collections.abc import Collection

from qccd_router.data.models.core import GateId, QubitId, TrapId, TrapPath
from qccd_router.data.models.scoring import ScoreWeights, TrapScore
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.scoring.components import (
    Lookahead,
    excess_capacity_score,
    future_ops_score,
    movement_counts,
    parallelism_score,
    route_cost,
)


def trap_score(
    q1: QubitId,
    q2: QubitId,
    trap: TrapId,
    path: TrapPath,
    config: IonConfiguration,
    lookahead: Lookahead,
    busy_traps: Collection[TrapId],
    weights: ScoreWeights,
    *,
    exclude: GateId | None = None,
    extra_shuttles: int = 0,
    extra_swaps: int = 0,
) -> TrapScore:
    """Score *trap* as the execution site of the gate on ``(q1, q2)``.

    Args:
        path:           Trap sequence from ``T(q1)`` to ``T(q2)`` through *trap*.
        config:         Planned configuration, after any bottleneck relocations for this candidate.
        exclude:        Id of the gate being placed; it is left out of its own lookahead.
        extra_shuttles: Hops of bottleneck relocations charged to this candidate.
        extra_swaps:    SWAPs of those relocations.
    """
    sh, sw = movement_counts(q1, q2, path, trap, config)
    fo = future_ops_score(q1, trap, lookahead, config, exclude) + future_ops_score(
        q2, trap, lookahead, config, exclude
    )
    incoming = sum(1 for q in (q1, q2) if config.trap_of(q) != trap)
    ec = excess_capacity_score(trap, config, incoming)
    pr = parallelism_score(trap, busy_traps)
    return TrapScore.combine(weights, sh + extra_shuttles, sw + extra_swaps, fo, ec, pr)


def bottleneck_score(
    qubit: QubitId,
    trap: TrapId,
    path: TrapPath,
    config: IonConfiguration,
    lookahead: Lookahead,
    *,
    fo_config: IonConfiguration | None = None,
) -> float:
    """``-SH - SW + FO`` for relocating *qubit* along *path* to *trap*, all weights one.

    *fo_config* locates partners for the future-operation term when it differs from *config*.
    """
    sh, sw = route_cost(config, qubit, path)
    return -sh - sw + future_ops_score(qubit, trap, lookahead, fo_config if fo_config is not None else config)
