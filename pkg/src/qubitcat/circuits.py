"""Two-qubit circuit-building mini-game rules.

The player places and removes gates on a two-wire grid. The live circuit
matrix and output state are recomputed after every edit and color-coded
entry by entry. Winning requires matching BOTH the target circuit matrix
and the target output state exactly entry-wise (no global-phase slack):
different circuits can produce the same output state, and the matrix is
shown numerically to the player.

From level two onward every gate removal costs one fish and one point
from the ten available; each three fish lost strips one outfit stage, and
an empty bowl ends the session with a retry prompt.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional

import numpy as np

from .errors import InvalidMove, NotWonYet, SessionFinished
from .quantum import (
    MATCH_TOL,
    NORM_TOL,
    ColorClass,
    Gate,
    GateKind,
    StateVector,
    UnitaryMatrix,
    classify_matrix,
    gate_matrix,
    lift_single_qubit_gate,
)

STARTING_FISH = 9
STARTING_POINTS = 10
FISH_PER_OUTFIT_STAGE = 3


class Status(str, enum.Enum):
    IN_PROGRESS = "InProgress"
    WON = "Won"
    EXHAUSTED = "Exhausted"


@dataclass(frozen=True)
class FishState:
    """Fish bowl, remaining points, and outfit stage after some removals."""

    fish_remaining: int
    points_remaining: int
    outfit_stage: int

    @classmethod
    def after_removals(cls, penalized_removals: int) -> "FishState":
        lost = min(STARTING_FISH, penalized_removals)
        return cls(
            fish_remaining=STARTING_FISH - lost,
            points_remaining=STARTING_POINTS - lost,
            outfit_stage=lost // FISH_PER_OUTFIT_STAGE,
        )


@dataclass(frozen=True)
class Column:
    """One grid column: per-wire single-qubit gates, or one CNOT spanning both."""

    singles: tuple[Optional[GateKind], Optional[GateKind]] = (None, None)
    cnot: Optional[tuple[int, int]] = None  # (control, target)

    def __post_init__(self) -> None:
        if self.cnot is not None and any(g is not None for g in self.singles):
            raise ValueError("a column with a CNOT holds nothing else")

    @property
    def is_empty(self) -> bool:
        return self.cnot is None and self.singles == (None, None)

    def matrix(self) -> np.ndarray:
        if self.cnot is not None:
            control, target = self.cnot
            return gate_matrix(Gate(GateKind.CNOT, control, target), 2).entries
        total = np.eye(4, dtype=complex)
        for wire, kind in enumerate(self.singles):
            if kind is not None:
                total = lift_single_qubit_gate(Gate(kind), wire).entries @ total
        return total


EMPTY_COLUMN = Column()


@dataclass(frozen=True)
class CircuitLevel:
    id: int
    input_state: StateVector
    target_matrix: UnitaryMatrix
    target_state: StateVector
    allowed_gates: frozenset[GateKind]
    max_columns: int
    penalty_enabled: bool
    intro_popup: Optional[str] = None
    hint: Optional[str] = None
    tooltips: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not 1 <= self.id <= 12:
            raise ValueError(f"level id must be 1..12, got {self.id}")
        if self.input_state.num_qubits != 2 or self.target_state.num_qubits != 2:
            raise ValueError("circuit levels are two-qubit")
        if self.target_matrix.dim != 4:
            raise ValueError("target matrix must be 4x4")
        if self.max_columns < 1:
            raise ValueError("max_columns must be >= 1")
        if not self.allowed_gates:
            raise ValueError("allowed_gates must be non-empty")
        if self.penalty_enabled != (self.id >= 2):
            raise ValueError("the fish penalty applies exactly from level two onward")
        produced = self.target_matrix.entries @ self.input_state.amplitudes
        if np.max(np.abs(produced - self.target_state.amplitudes)) > NORM_TOL:
            raise ValueError("target_state is not target_matrix applied to input_state")


@dataclass(frozen=True)
class CircuitSession:
    level: CircuitLevel
    grid: tuple[Column, ...]
    removals: int
    status: Status

    @property
    def level_id(self) -> int:
        return self.level.id

    @property
    def fish(self) -> FishState:
        penalized = self.removals if self.level.penalty_enabled else 0
        return FishState.after_removals(penalized)


def empty_grid(max_columns: int) -> tuple[Column, ...]:
    return (EMPTY_COLUMN,) * max_columns


def start_level(level: CircuitLevel) -> CircuitSession:
    session = CircuitSession(
        level=level,
        grid=empty_grid(level.max_columns),
        removals=0,
        status=Status.IN_PROGRESS,
    )
    # an identity target would be matched by the empty grid immediately
    return _with_status(session)


def evaluate(
    session: CircuitSession,
) -> tuple[UnitaryMatrix, StateVector, list[list[ColorClass]]]:
    """Compose the grid left to right; empty columns are identities."""
    total = np.eye(4, dtype=complex)
    for column in session.grid:
        total = column.matrix() @ total
    matrix = UnitaryMatrix(total)
    output = StateVector(total @ session.level.input_state.amplitudes)
    return matrix, output, classify_matrix(matrix)


def check_win(session: CircuitSession) -> bool:
    """Both the circuit matrix and the output state must match, entry-wise."""
    matrix, output, _ = evaluate(session)
    level = session.level
    matrix_ok = np.max(np.abs(matrix.entries - level.target_matrix.entries)) <= MATCH_TOL
    state_ok = np.max(np.abs(output.amplitudes - level.target_state.amplitudes)) <= MATCH_TOL
    return bool(matrix_ok and state_ok)


def _with_status(session: CircuitSession) -> CircuitSession:
    if session.status is Status.IN_PROGRESS and check_win(session):
        return replace(session, status=Status.WON)
    return session


def _require_in_progress(session: CircuitSession) -> None:
    if session.status is not Status.IN_PROGRESS:
        raise SessionFinished(f"session already {session.status.value}")


def _check_column(session: CircuitSession, column: int) -> None:
    if not 0 <= column < session.level.max_columns:
        raise InvalidMove(
            f"column {column} out of range (grid has {session.level.max_columns})"
        )


def place_gate(
    session: CircuitSession, gate: Gate, column: int, wire: Optional[int] = None
) -> CircuitSession:
    """Place a gate into an empty slot; placement is free of penalty."""
    _require_in_progress(session)
    _check_column(session, column)
    if gate.kind not in session.level.allowed_gates:
        raise InvalidMove(f"gate {gate.name} is not allowed on this level")
    slot = session.grid[column]
    if gate.kind == GateKind.CNOT:
        if not slot.is_empty:
            raise InvalidMove(f"column {column} is occupied; CNOT needs the full column")
        new_column = Column(cnot=(gate.control, gate.target))
    else:
        if wire not in (0, 1):
            raise InvalidMove("single-qubit gates need a wire (0 or 1)")
        if slot.cnot is not None:
            raise InvalidMove(f"column {column} is filled by a CNOT")
        if slot.singles[wire] is not None:
            raise InvalidMove(f"slot (column {column}, wire {wire}) is occupied")
        singles = list(slot.singles)
        singles[wire] = gate.kind
        new_column = Column(singles=(singles[0], singles[1]))
    grid = session.grid[:column] + (new_column,) + session.grid[column + 1 :]
    return _with_status(replace(session, grid=grid))


def remove_gate(session: CircuitSession, column: int, wire: int) -> CircuitSession:
    """Clear a slot; on penalty levels the cat loses a fish and a point."""
    _require_in_progress(session)
    _check_column(session, column)
    slot = session.grid[column]
    if slot.cnot is not None:
        new_column = EMPTY_COLUMN  # the CNOT spans both wires
    elif wire in (0, 1) and slot.singles[wire] is not None:
        singles = list(slot.singles)
        singles[wire] = None
        new_column = Column(singles=(singles[0], singles[1]))
    else:
        raise InvalidMove(f"slot (column {column}, wire {wire}) is empty")
    grid = session.grid[:column] + (new_column,) + session.grid[column + 1 :]
    removals = session.removals + 1
    updated = replace(session, grid=grid, removals=removals)
    # a removal can complete the target; reward wins before exhausting the bowl
    updated = _with_status(updated)
    if (
        updated.status is Status.IN_PROGRESS
        and updated.level.penalty_enabled
        and updated.fish.fish_remaining == 0
    ):
        return replace(updated, status=Status.EXHAUSTED)
    return updated


def level_score(session: CircuitSession) -> int:
    """The points still in the bowl when the level was won."""
    if session.status is not Status.WON:
        raise NotWonYet("score is only defined for a won session")
    return session.fish.points_remaining
