import json

import numpy as np
import pytest

from qubitcat import entanglement as ent
from qubitcat import quiz as qz
from qubitcat.content import (
    ContentError,
    parse_bloch_level,
    parse_circuit_move,
    parse_entanglement_level,
    parse_gate,
    parse_quiz,
    MoveError,
)
from qubitcat.entanglement import Mode
from qubitcat.quiz import QuizKind


def test_shipped_level_counts(content):
    assert sorted(content.bloch) == list(range(1, 13))
    assert sorted(content.entanglement) == list(range(1, 13))
    assert sorted(content.circuits) == list(range(1, 13))
    assert sorted(content.quizzes) == ["assessment", "bloch", "circuits", "entanglement"]


def test_bloch_difficulty_nondecreasing(content):
    lengths = [content.bloch[i].min_solution_length for i in range(1, 13)]
    assert lengths == sorted(lengths)
    assert lengths[0] == 1  # easy introductory level


def test_entanglement_mode_schedule(content):
    for level_id, level in content.entanglement.items():
        expected = Mode.CORRELATED if level_id <= 6 else Mode.ANTI_CORRELATED
        assert level.mode is expected
        assert ent.validate_level(level) == []


def test_decoherence_arrives_mid_game(content):
    flags = [content.entanglement[i].decoherence_enabled for i in range(1, 13)]
    assert flags[:3] == [False, False, False]
    assert all(flags[3:])


def test_circuits_penalty_schedule(content):
    assert content.circuits[1].penalty_enabled is False
    for level_id in range(2, 13):
        assert content.circuits[level_id].penalty_enabled is True


def test_circuit_targets_consistent(content):
    for level in content.circuits.values():
        produced = level.target_matrix.entries @ level.input_state.amplitudes
        assert np.max(np.abs(produced - level.target_state.amplitudes)) < 1e-9


def test_quiz_banks_well_formed(content):
    assessment = content.quizzes["assessment"]
    assert assessment.kind is QuizKind.ASSESSMENT
    assert all(question.allow_idk for question in assessment.questions)
    for quiz_id in ("bloch", "entanglement", "circuits"):
        quiz = content.quizzes[quiz_id]
        assert quiz.kind is QuizKind.IN_GAME
        assert len(quiz.questions) == 10
        assert not any(question.allow_idk for question in quiz.questions)


def test_no_overlap_with_assessment(content):
    assessment_prompts = {
        question.prompt for question in content.quizzes["assessment"].questions
    }
    for quiz_id in ("bloch", "entanglement", "circuits"):
        prompts = {question.prompt for question in content.quizzes[quiz_id].questions}
        assert not prompts & assessment_prompts


def test_in_game_banks_grade_perfectly(content):
    for quiz_id in ("bloch", "entanglement", "circuits"):
        quiz = content.quizzes[quiz_id]
        score, _ = qz.grade(quiz, [question.correct_index for question in quiz.questions])
        assert score == 10


# -- parser error paths ----------------------------------------------------------


def test_parse_bloch_missing_field():
    with pytest.raises(ContentError, match="allowed_gates"):
        parse_bloch_level({"id": 1, "start_state": [[1, 0], [0, 0]],
                           "target_state": [[0, 0], [1, 0]],
                           "min_solution_length": 1})


def test_parse_bloch_unknown_gate():
    with pytest.raises(ContentError, match="unknown gate"):
        parse_bloch_level(
            {
                "id": 1,
                "start_state": [[1, 0], [0, 0]],
                "target_state": [[0, 0], [1, 0]],
                "allowed_gates": ["T"],
                "min_solution_length": 1,
            }
        )


def test_parse_bloch_unnormalized_state():
    with pytest.raises(ContentError, match="normalized"):
        parse_bloch_level(
            {
                "id": 1,
                "start_state": [[1, 0], [1, 0]],
                "target_state": [[0, 0], [1, 0]],
                "allowed_gates": ["X"],
                "min_solution_length": 1,
            }
        )


def test_parse_entanglement_bad_action():
    with pytest.raises(ContentError, match="obstacle"):
        parse_entanglement_level(
            {
                "id": 1,
                "mode": "Correlated",
                "decoherence_enabled": False,
                "course_a": [{"required_action": "Fly", "label": "x"}],
                "course_b": [{"required_action": "Jump", "label": "x"}],
            }
        )


def test_parse_quiz_rejects_five_options():
    data = {
        "id": "demo",
        "kind": "InGame",
        "questions": [
            {"prompt": "p", "options": ["a", "b", "c", "d", "e"], "correct_index": 0}
        ]
        * 10,
    }
    with pytest.raises(ContentError, match="4 options"):
        parse_quiz(data)


def test_parse_gate_and_moves():
    gate = parse_gate({"gate": "CNOT", "control": 1, "target": 0})
    assert gate.control == 1 and gate.target == 0
    with pytest.raises(MoveError):
        parse_gate({"gate": "CNOT", "control": 1, "target": 1})
    move = parse_circuit_move({"op": "place", "gate": "H", "column": 2, "wire": 1})
    assert move.op == "place" and move.column == 2 and move.wire == 1
    with pytest.raises(MoveError):
        parse_circuit_move({"op": "swap", "column": 0})
    with pytest.raises(MoveError):
        parse_circuit_move({"op": "remove", "column": 0})


def test_level_files_are_canonical_json(levels_dir):
    # every shipped file parses and its id matches its filename
    for path in sorted(levels_dir.glob("*/*.json")):
        data = json.loads(path.read_text())
        assert data["id"] == int(path.stem)
