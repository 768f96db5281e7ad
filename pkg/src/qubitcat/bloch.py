"""Bloch sphere mini-game rules.

The player applies single-qubit gates to steer the cat (current state)
onto the mouse (target state). Matching is up to global phase. Scoring
rewards short solutions: 10 points minus one per move beyond the level's
minimal solution, never below 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional

from .errors import InvalidMove, NotWonYet, SessionFinished
from .quantum import (
    MATCH_TOL,
    Gate,
    GateKind,
    SINGLE_QUBIT_KINDS,
    StateVector,
    apply_gate,
    equal_up_to_global_phase,
)

MAX_SCORE = 10


class Status(str, enum.Enum):
    IN_PROGRESS = "InProgress"
    WON = "Won"


@dataclass(frozen=True)
class BlochLevel:
    id: int
    start_state: StateVector
    target_state: StateVector
    allowed_gates: frozenset[GateKind]
    min_solution_length: int
    intro_popup: Optional[str] = None
    hint: Optional[str] = None
    tooltips: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not 1 <= self.id <= 12:
            raise ValueError(f"level id must be 1..12, got {self.id}")
        if self.start_state.num_qubits != 1 or self.target_state.num_qubits != 1:
            raise ValueError("Bloch levels are single-qubit")
        if not self.allowed_gates:
            raise ValueError("allowed_gates must be non-empty")
        if not self.allowed_gates <= SINGLE_QUBIT_KINDS:
            raise ValueError("Bloch levels allow only single-qubit gates")
        if self.min_solution_length < 0:
            raise ValueError("min_solution_length must be >= 0")


@dataclass(frozen=True)
class BlochSession:
    level: BlochLevel
    current_state: StateVector
    moves: tuple[Gate, ...]
    status: Status

    @property
    def level_id(self) -> int:
        return self.level.id


def start_level(level: BlochLevel) -> BlochSession:
    return BlochSession(
        level=level,
        current_state=level.start_state,
        moves=(),
        status=Status.IN_PROGRESS,
    )


def apply_player_gate(session: BlochSession, gate: Gate) -> BlochSession:
    """Apply one gate; the session is Won once the target is reached."""
    if session.status is not Status.IN_PROGRESS:
        raise SessionFinished("level already won; reset to play again")
    if gate.kind not in session.level.allowed_gates:
        raise InvalidMove(f"gate {gate.name} is not allowed on this level")
    state = apply_gate(session.current_state, gate)
    won = equal_up_to_global_phase(state, session.level.target_state, MATCH_TOL)
    return replace(
        session,
        current_state=state,
        moves=session.moves + (gate,),
        status=Status.WON if won else Status.IN_PROGRESS,
    )


def level_score(session: BlochSession) -> int:
    """10 minus one point per move beyond the minimal solution, floor 1."""
    if session.status is not Status.WON:
        raise NotWonYet("score is only defined for a won session")
    excess = len(session.moves) - session.level.min_solution_length
    return max(1, MAX_SCORE - excess)


def replay(level: BlochLevel, moves: tuple[Gate, ...] | list[Gate]) -> BlochSession:
    """Re-run a move log from the level's start state."""
    session = start_level(level)
    for gate in moves:
        session = apply_player_gate(session, gate)
    return session
