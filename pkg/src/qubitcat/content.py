"""Level and quiz file loading.

Content ships as plain JSON: levels/bloch/NN.json, levels/entanglement/NN.json,
levels/circuits/NN.json, and quizzes/*.json. States and matrices use the
service-wide encoding (complex as [re, im], matrices row-major). Move scripts
for the simulator and the HTTP move endpoint share one schema, parsed here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .bloch import BlochLevel
from .circuits import CircuitLevel
from .entanglement import (
    Action,
    Course,
    EntanglementLevel,
    Mode,
    Obstacle,
)
from .quantum import (
    Gate,
    GateKind,
    matrix_from_json,
    state_from_json,
)
from .quiz import Question, Quiz, QuizKind

QUIZ_IDS = ("assessment", "bloch", "entanglement", "circuits")


class ContentError(ValueError):
    """A level or quiz file is malformed."""


def _require(data: dict, key: str, where: str) -> Any:
    if key not in data:
        raise ContentError(f"{where}: missing field {key!r}")
    return data[key]


def _gate_kinds(names: list[str], where: str) -> frozenset[GateKind]:
    kinds = set()
    for name in names:
        try:
            kinds.add(GateKind(name))
        except ValueError:
            raise ContentError(f"{where}: unknown gate {name!r}") from None
    return frozenset(kinds)


def parse_bloch_level(data: dict, where: str = "bloch level") -> BlochLevel:
    try:
        return BlochLevel(
            id=int(_require(data, "id", where)),
            start_state=state_from_json(_require(data, "start_state", where)),
            target_state=state_from_json(_require(data, "target_state", where)),
            allowed_gates=_gate_kinds(_require(data, "allowed_gates", where), where),
            min_solution_length=int(_require(data, "min_solution_length", where)),
            intro_popup=data.get("intro_popup"),
            hint=data.get("hint"),
            tooltips=dict(data.get("tooltips", {})),
        )
    except ContentError:
        raise
    except (ValueError, TypeError) as exc:
        raise ContentError(f"{where}: {exc}") from exc


def _parse_course(items: list, where: str) -> Course:
    obstacles = []
    for i, item in enumerate(items):
        try:
            obstacles.append(
                Obstacle(
                    required_action=Action(_require(item, "required_action", where)),
                    label=str(item.get("label", f"obstacle {i + 1}")),
                )
            )
        except ValueError as exc:
            raise ContentError(f"{where}: obstacle {i}: {exc}") from exc
    if not obstacles:
        raise ContentError(f"{where}: course is empty")
    return Course(tuple(obstacles))


def parse_entanglement_level(data: dict, where: str = "entanglement level") -> EntanglementLevel:
    try:
        return EntanglementLevel(
            id=int(_require(data, "id", where)),
            course_a=_parse_course(_require(data, "course_a", where), where),
            course_b=_parse_course(_require(data, "course_b", where), where),
            mode=Mode(_require(data, "mode", where)),
            decoherence_enabled=bool(_require(data, "decoherence_enabled", where)),
            wrong_move_limit=int(data.get("wrong_move_limit", 5)),
            intro_popup=data.get("intro_popup"),
        )
    except ContentError:
        raise
    except (ValueError, TypeError) as exc:
        raise ContentError(f"{where}: {exc}") from exc


def parse_circuit_level(data: dict, where: str = "circuit level") -> CircuitLevel:
    try:
        return CircuitLevel(
            id=int(_require(data, "id", where)),
            input_state=state_from_json(_require(data, "input_state", where)),
            target_matrix=matrix_from_json(_require(data, "target_matrix", where)),
            target_state=state_from_json(_require(data, "target_state", where)),
            allowed_gates=_gate_kinds(_require(data, "allowed_gates", where), where),
            max_columns=int(_require(data, "max_columns", where)),
            penalty_enabled=bool(_require(data, "penalty_enabled", where)),
            intro_popup=data.get("intro_popup"),
            hint=data.get("hint"),
            tooltips=dict(data.get("tooltips", {})),
        )
    except ContentError:
        raise
    except (ValueError, TypeError) as exc:
        raise ContentError(f"{where}: {exc}") from exc


def parse_quiz(data: dict, where: str = "quiz") -> Quiz:
    kind_name = _require(data, "kind", where)
    try:
        kind = QuizKind(kind_name)
    except ValueError:
        raise ContentError(f"{where}: unknown quiz kind {kind_name!r}") from None
    questions = []
    for i, item in enumerate(_require(data, "questions", where)):
        q_where = f"{where}: question {i}"
        options = _require(item, "options", q_where)
        if not isinstance(options, list) or len(options) != 4:
            raise ContentError(f"{q_where}: exactly 4 options required")
        try:
            questions.append(
                Question(
                    id=str(item.get("id", f"q{i + 1}")),
                    prompt=str(_require(item, "prompt", q_where)),
                    options=tuple(str(o) for o in options),
                    correct_index=int(_require(item, "correct_index", q_where)),
                    allow_idk=kind is QuizKind.ASSESSMENT,
                )
            )
        except ContentError:
            raise
        except (ValueError, TypeError) as exc:
            raise ContentError(f"{q_where}: {exc}") from exc
    try:
        return Quiz(id=str(_require(data, "id", where)), kind=kind, questions=tuple(questions))
    except ValueError as exc:
        raise ContentError(f"{where}: {exc}") from exc


def _load_json(path: Path) -> dict:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise ContentError(f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise ContentError(f"{path}: invalid JSON ({exc})") from exc


def load_bloch_level(path: Path) -> BlochLevel:
    return parse_bloch_level(_load_json(path), where=str(path))


def load_entanglement_level(path: Path) -> EntanglementLevel:
    return parse_entanglement_level(_load_json(path), where=str(path))


def load_circuit_level(path: Path) -> CircuitLevel:
    return parse_circuit_level(_load_json(path), where=str(path))


def load_quiz(path: Path) -> Quiz:
    return parse_quiz(_load_json(path), where=str(path))


@dataclass
class ContentBundle:
    """All shipped levels and quiz banks, keyed for the service and CLI."""

    bloch: dict[int, BlochLevel] = field(default_factory=dict)
    entanglement: dict[int, EntanglementLevel] = field(default_factory=dict)
    circuits: dict[int, CircuitLevel] = field(default_factory=dict)
    quizzes: dict[str, Quiz] = field(default_factory=dict)

    def levels_for(self, game_id: str) -> dict[int, Any]:
        try:
            return {"bloch": self.bloch, "entanglement": self.entanglement,
                    "circuits": self.circuits}[game_id]
        except KeyError:
            raise ContentError(f"unknown game {game_id!r}") from None


GAME_LOADERS = {
    "bloch": load_bloch_level,
    "entanglement": load_entanglement_level,
    "circuits": load_circuit_level,
}


def load_content(levels_dir: Path, quizzes_dir: Path) -> ContentBundle:
    """Load all content, failing fast on the first malformed file."""
    bundle = ContentBundle()
    for game_id, loader in GAME_LOADERS.items():
        directory = Path(levels_dir) / game_id
        if not directory.is_dir():
            raise ContentError(f"{directory}: missing level directory")
        for path in sorted(directory.glob("*.json")):
            level = loader(path)
            if level.id in bundle.levels_for(game_id):
                raise ContentError(f"{path}: duplicate level id {level.id}")
            bundle.levels_for(game_id)[level.id] = level
    for path in sorted(Path(quizzes_dir).glob("*.json")):
        quiz = load_quiz(path)
        if quiz.id in bundle.quizzes:
            raise ContentError(f"{path}: duplicate quiz id {quiz.id}")
        bundle.quizzes[quiz.id] = quiz
    return bundle


# -- move parsing (shared by the HTTP service and `qq simulate`) ---------------


class MoveError(ValueError):
    """A move payload does not match the game's schema."""


def _require_move(data: dict, key: str, where: str):
    if key not in data:
        raise MoveError(f"{where}: missing field {key!r}")
    return data[key]


def parse_gate(data: dict, where: str = "move") -> Gate:
    name = _require_move(data, "gate", where)
    try:
        kind = GateKind(name)
    except ValueError:
        raise MoveError(f"{where}: unknown gate {name!r}") from None
    if kind == GateKind.CNOT:
        control = data.get("control", 0)
        target = data.get("target", 1)
        try:
            return Gate(kind, control=int(control), target=int(target))
        except ValueError as exc:
            raise MoveError(f"{where}: {exc}") from exc
    return Gate(kind)


def parse_action(data: dict, where: str = "move") -> Action:
    name = _require_move(data, "action", where)
    try:
        return Action(name)
    except ValueError:
        raise MoveError(f"{where}: unknown action {name!r}") from None


@dataclass(frozen=True)
class CircuitMove:
    op: str  # "place" | "remove"
    column: int
    wire: Optional[int] = None
    gate: Optional[Gate] = None


def parse_circuit_move(data: dict, where: str = "move") -> CircuitMove:
    op = _require_move(data, "op", where)
    if op not in ("place", "remove"):
        raise MoveError(f"{where}: op must be 'place' or 'remove', got {op!r}")
    try:
        column = int(_require_move(data, "column", where))
    except (TypeError, ValueError):
        raise MoveError(f"{where}: column must be an integer") from None
    wire = data.get("wire")
    if wire is not None:
        wire = int(wire)
    if op == "remove":
        if wire is None:
            raise MoveError(f"{where}: remove needs a wire")
        return CircuitMove(op="remove", column=column, wire=wire)
    gate = parse_gate(data, where)
    return CircuitMove(op="place", column=column, wire=wire, gate=gate)
