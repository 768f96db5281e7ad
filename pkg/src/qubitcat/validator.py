"""Full content validation: schemas, engine invariants, and solvability.

Used by `qq validate-all` and by CI. Every check failure is a human-readable
violation string; an empty report means the shipped content is playable:
all 36 levels load, every level is solvable within the search budget, the
stored Bloch minimum lengths match the solver exactly, and the four quiz
banks are well-formed with no assessment/in-game overlap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import entanglement as ent_game
from .content import (
    ContentError,
    GAME_LOADERS,
    QUIZ_IDS,
    load_quiz,
)
from .quiz import QuizKind
from .solver import DEFAULT_MAX_DEPTH, SolverError, solve_bloch, solve_circuit

LEVELS_PER_GAME = 12


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    checked_levels: int = 0
    checked_quizzes: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)


def _expected_files(directory: Path) -> list[Path]:
    return [directory / f"{level_id:02d}.json" for level_id in range(1, LEVELS_PER_GAME + 1)]


def validate_levels(levels_dir: Path, report: ValidationReport,
                    max_depth: int = DEFAULT_MAX_DEPTH) -> None:
    for game_id, loader in GAME_LOADERS.items():
        directory = Path(levels_dir) / game_id
        if not directory.is_dir():
            report.add(f"{directory}: missing level directory")
            continue
        extras = set(directory.glob("*.json")) - set(_expected_files(directory))
        for extra in sorted(extras):
            report.add(f"{extra}: unexpected level file")
        levels = {}
        for path in _expected_files(directory):
            if not path.exists():
                report.add(f"{path}: missing level file")
                continue
            try:
                level = loader(path)
            except ContentError as exc:
                report.add(str(exc))
                continue
            expected_id = int(path.stem)
            if level.id != expected_id:
                report.add(f"{path}: id {level.id} does not match filename")
                continue
            levels[level.id] = level
            report.checked_levels += 1
        if game_id == "bloch":
            _validate_bloch_levels(levels, report, max_depth)
        elif game_id == "entanglement":
            _validate_entanglement_levels(levels, report)
        else:
            _validate_circuit_levels(levels, report, max_depth)


def _validate_bloch_levels(levels, report, max_depth) -> None:
    previous_min = 0
    for level_id in sorted(levels):
        level = levels[level_id]
        try:
            path = solve_bloch(level, max_depth)
        except SolverError as exc:
            report.add(f"bloch level {level_id}: {exc}")
            continue
        if path is None:
            report.add(
                f"bloch level {level_id}: target unreachable within depth {max_depth}"
            )
            continue
        if len(path) != level.min_solution_length:
            report.add(
                f"bloch level {level_id}: min_solution_length {level.min_solution_length} "
                f"but solver found {len(path)}"
            )
        if level.min_solution_length < previous_min:
            report.add(
                f"bloch level {level_id}: min_solution_length decreases "
                f"({previous_min} -> {level.min_solution_length})"
            )
        previous_min = max(previous_min, level.min_solution_length)


def _validate_entanglement_levels(levels, report) -> None:
    for level_id in sorted(levels):
        for violation in ent_game.validate_level(levels[level_id]):
            report.add(violation)


def _validate_circuit_levels(levels, report, max_depth) -> None:
    for level_id in sorted(levels):
        level = levels[level_id]
        try:
            placements = solve_circuit(level, max_depth)
        except SolverError as exc:
            report.add(f"circuit level {level_id}: {exc}")
            continue
        if placements is None:
            report.add(
                f"circuit level {level_id}: target not buildable within "
                f"{level.max_columns} columns (depth {max_depth})"
            )


def validate_quizzes(quizzes_dir: Path, report: ValidationReport) -> None:
    directory = Path(quizzes_dir)
    if not directory.is_dir():
        report.add(f"{directory}: missing quiz directory")
        return
    quizzes = {}
    for quiz_id in QUIZ_IDS:
        path = directory / f"{quiz_id}.json"
        if not path.exists():
            report.add(f"{path}: missing quiz bank")
            continue
        try:
            quiz = load_quiz(path)
        except ContentError as exc:
            report.add(str(exc))
            continue
        if quiz.id != quiz_id:
            report.add(f"{path}: quiz id {quiz.id!r} does not match filename")
            continue
        quizzes[quiz_id] = quiz
        report.checked_quizzes += 1
    for extra in sorted(set(directory.glob("*.json"))
                        - {directory / f"{q}.json" for q in QUIZ_IDS}):
        report.add(f"{extra}: unexpected quiz file")

    assessment = quizzes.get("assessment")
    if assessment is not None:
        if assessment.kind is not QuizKind.ASSESSMENT:
            report.add("assessment bank must have kind Assessment")
        prompts = {question.prompt for question in assessment.questions}
        for quiz_id, quiz in quizzes.items():
            if quiz_id == "assessment":
                continue
            if quiz.kind is not QuizKind.IN_GAME:
                report.add(f"quiz {quiz_id} must have kind InGame")
            overlap = prompts & {question.prompt for question in quiz.questions}
            if overlap:
                report.add(
                    f"quiz {quiz_id} repeats assessment questions: {sorted(overlap)}"
                )


def validate_all(levels_dir: Path, quizzes_dir: Path,
                 max_depth: int = DEFAULT_MAX_DEPTH) -> ValidationReport:
    report = ValidationReport()
    validate_levels(levels_dir, report, max_depth)
    validate_quizzes(quizzes_dir, report)
    return report
