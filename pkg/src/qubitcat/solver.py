"""Breadth-first search for minimal level solutions.

Bloch levels: BFS over gate sequences, deduplicating visited states after
normalizing away the global phase and rounding to 1e-6 (the win comparator
is phase-free). Circuit levels: BFS over grids built one placement per
column, deduplicating on the exactly-rounded composed matrix (the win check
is exact entry-wise). Every solution found is verified by replaying it
through the corresponding game engine before it is returned.

The search spaces stay small: the rostered gates generate finite matrix
groups, so dedup caps the frontier long before the depth limit bites.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import bloch as bloch_game
from . import circuits as circuits_game
from .bloch import BlochLevel
from .circuits import CircuitLevel
from .content import CircuitMove
from .quantum import (
    Gate,
    GateKind,
    MATCH_TOL,
    StateVector,
    equal_up_to_global_phase,
    gate_matrix,
    lift_single_qubit_gate,
)

DEFAULT_MAX_DEPTH = 8
_ROUND_DECIMALS = 6  # state-dedup rounding, matches the 1e-6 win tolerance


class SolverError(RuntimeError):
    pass


def _phase_normalized_key(vec: np.ndarray) -> bytes:
    k = int(np.argmax(np.abs(vec)))
    pivot = vec[k]
    normalized = vec * (np.conj(pivot) / abs(pivot))
    return np.round(normalized, _ROUND_DECIMALS).tobytes()


def _exact_key(mat: np.ndarray) -> bytes:
    return np.round(mat, _ROUND_DECIMALS).tobytes()


def solve_bloch(level: BlochLevel, max_depth: int = DEFAULT_MAX_DEPTH) -> Optional[list[Gate]]:
    """Shortest allowed-gate sequence from start to target, or None."""
    gates = [Gate(kind) for kind in sorted(level.allowed_gates, key=lambda k: k.value)]
    matrices = {g: gate_matrix(g, 1).entries for g in gates}
    start = level.start_state.amplitudes
    target = level.target_state

    queue: deque[tuple[np.ndarray, list[Gate]]] = deque([(start, [])])
    seen = {_phase_normalized_key(start)}
    while queue:
        vec, path = queue.popleft()
        if equal_up_to_global_phase(StateVector(vec), target, MATCH_TOL):
            return _verify_bloch(level, path)
        if len(path) >= max_depth:
            continue
        for gate in gates:
            nxt = matrices[gate] @ vec
            key = _phase_normalized_key(nxt)
            if key not in seen:
                seen.add(key)
                queue.append((nxt, path + [gate]))
    return None


def _verify_bloch(level: BlochLevel, path: list[Gate]) -> list[Gate]:
    if not path:
        # zero-length solution: the start already matches the target
        if not equal_up_to_global_phase(level.start_state, level.target_state, MATCH_TOL):
            raise SolverError(f"bloch level {level.id}: empty solution does not replay")
        return path
    session = bloch_game.start_level(level)
    for gate in path:
        session = bloch_game.apply_player_gate(session, gate)
    if session.status is not bloch_game.Status.WON:
        raise SolverError(f"bloch level {level.id}: solver path does not replay to Won")
    return path


def _circuit_moves(level: CircuitLevel) -> list[tuple[Gate, Optional[int]]]:
    moves: list[tuple[Gate, Optional[int]]] = []
    for kind in sorted(level.allowed_gates, key=lambda k: k.value):
        if kind == GateKind.CNOT:
            moves.append((Gate(kind, control=0, target=1), None))
            moves.append((Gate(kind, control=1, target=0), None))
        else:
            moves.append((Gate(kind), 0))
            moves.append((Gate(kind), 1))
    return moves


def solve_circuit(
    level: CircuitLevel, max_depth: int = DEFAULT_MAX_DEPTH
) -> Optional[list[CircuitMove]]:
    """Shortest placement sequence building the target matrix, or None.

    Placements go one per column left to right, so a solution of length n
    needs n columns; any two single-qubit gates sharing a column compose to
    the same matrix as the two adjacent single-gate columns, so this search
    loses no generality within the level's column budget.
    """
    depth = min(max_depth, level.max_columns)
    moves = _circuit_moves(level)
    lifted = {}
    for gate, wire in moves:
        if gate.kind == GateKind.CNOT:
            lifted[(gate, wire)] = gate_matrix(gate, 2).entries
        else:
            lifted[(gate, wire)] = lift_single_qubit_gate(gate, wire).entries
    target = level.target_matrix.entries

    start = np.eye(4, dtype=complex)
    queue: deque[tuple[np.ndarray, list[tuple[Gate, Optional[int]]]]] = deque(
        [(start, [])]
    )
    seen = {_exact_key(start)}
    while queue:
        mat, path = queue.popleft()
        if np.max(np.abs(mat - target)) <= MATCH_TOL:
            return _verify_circuit(level, path)
        if len(path) >= depth:
            continue
        for move in moves:
            nxt = lifted[move] @ mat
            key = _exact_key(nxt)
            if key not in seen:
                seen.add(key)
                queue.append((nxt, path + [move]))
    return None


def _verify_circuit(
    level: CircuitLevel, path: list[tuple[Gate, Optional[int]]]
) -> list[CircuitMove]:
    placements = [
        CircuitMove(op="place", column=i, wire=wire, gate=gate)
        for i, (gate, wire) in enumerate(path)
    ]
    session = circuits_game.start_level(level)
    if not path and session.status is circuits_game.Status.WON:
        return placements
    for move in placements:
        session = circuits_game.place_gate(session, move.gate, move.column, move.wire)
    if session.status is not circuits_game.Status.WON:
        raise SolverError(f"circuit level {level.id}: solver path does not replay to Won")
    return placements


@dataclass(frozen=True)
class SolveResult:
    game_id: str
    length: int
    description: list[str]


def solve_level(level, max_depth: int = DEFAULT_MAX_DEPTH) -> Optional[SolveResult]:
    """Solve either level kind, describing the solution as move strings."""
    if isinstance(level, BlochLevel):
        path = solve_bloch(level, max_depth)
        if path is None:
            return None
        return SolveResult("bloch", len(path), [g.name for g in path])
    if isinstance(level, CircuitLevel):
        placements = solve_circuit(level, max_depth)
        if placements is None:
            return None
        return SolveResult(
            "circuits",
            len(placements),
            [
                f"{move.gate} @ column {move.column}"
                + (f", wire {move.wire}" if move.wire is not None else "")
                for move in placements
            ],
        )
    raise TypeError(f"cannot solve {type(level).__name__}")
