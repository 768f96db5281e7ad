"""Quizzes: in-game banks with immediate feedback, and the assessment form.

In-game quizzes reveal the correct option after grading, are replayable,
and track a high score out of 10 plus an attempt counter; they never award
points. The assessment form adds an "I don't know" fifth option to every
question (pre-selected by default) and never reveals correct answers.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional, Sequence, Union

if TYPE_CHECKING:
    from .progression import PlayerProfile

QUESTIONS_PER_QUIZ = 10
OPTIONS_PER_QUESTION = 4
IDK = "idk"

Answer = Union[int, str]  # option index 0..3, or IDK


class QuizKind(str, enum.Enum):
    IN_GAME = "InGame"
    ASSESSMENT = "Assessment"


@dataclass(frozen=True)
class Question:
    id: str
    prompt: str
    options: tuple[str, str, str, str]
    correct_index: int
    allow_idk: bool

    def __post_init__(self) -> None:
        if len(self.options) != OPTIONS_PER_QUESTION:
            raise ValueError(f"question {self.id}: exactly 4 options required")
        if not 0 <= self.correct_index < OPTIONS_PER_QUESTION:
            raise ValueError(f"question {self.id}: correct_index out of range")


@dataclass(frozen=True)
class Quiz:
    id: str
    kind: QuizKind
    questions: tuple[Question, ...]

    def __post_init__(self) -> None:
        if len(self.questions) != QUESTIONS_PER_QUIZ:
            raise ValueError(
                f"quiz {self.id}: needs exactly {QUESTIONS_PER_QUIZ} questions, "
                f"got {len(self.questions)}"
            )
        want_idk = self.kind is QuizKind.ASSESSMENT
        for question in self.questions:
            if question.allow_idk != want_idk:
                raise ValueError(
                    f"quiz {self.id}: question {question.id} allow_idk must be "
                    f"{want_idk} for {self.kind.value} quizzes"
                )

    @property
    def reveal_correct(self) -> bool:
        return self.kind is QuizKind.IN_GAME


@dataclass(frozen=True)
class QuizRecord:
    quiz_id: str
    attempts: int = 0
    high_score: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.high_score <= QUESTIONS_PER_QUIZ:
            raise ValueError("high_score must be 0..10")
        if self.attempts < 0:
            raise ValueError("attempts must be >= 0")


@dataclass(frozen=True)
class QuestionResult:
    correct: bool
    reveal: Optional[int] = None  # correct_index, only for in-game quizzes


def grade(quiz: Quiz, answers: Sequence[Answer]) -> tuple[int, list[QuestionResult]]:
    """Score a full answer sheet; one point per correct option."""
    if len(answers) != len(quiz.questions):
        raise ValueError(
            f"expected {len(quiz.questions)} answers, got {len(answers)}"
        )
    results = []
    for question, answer in zip(quiz.questions, answers):
        if answer == IDK:
            if not question.allow_idk:
                raise ValueError(
                    f"question {question.id} has no 'I don't know' option"
                )
            correct = False
        elif isinstance(answer, int) and 0 <= answer < OPTIONS_PER_QUESTION:
            correct = answer == question.correct_index
        else:
            raise ValueError(f"invalid answer {answer!r} for question {question.id}")
        reveal = question.correct_index if quiz.reveal_correct and answer != IDK else None
        results.append(QuestionResult(correct=correct, reveal=reveal))
    return sum(r.correct for r in results), results


def default_assessment_answers(quiz: Quiz) -> list[Answer]:
    """The pre-selected answer sheet: "I don't know" on every question."""
    if quiz.kind is not QuizKind.ASSESSMENT:
        raise ValueError("only assessment quizzes pre-select 'I don't know'")
    return [IDK] * len(quiz.questions)


def record_attempt(profile: "PlayerProfile", quiz_id: str, score: int) -> "PlayerProfile":
    """Bump the attempt counter and high score; never touches points."""
    if not 0 <= score <= QUESTIONS_PER_QUIZ:
        raise ValueError("score must be 0..10")
    old = profile.quiz_records.get(quiz_id, QuizRecord(quiz_id=quiz_id))
    profile.quiz_records[quiz_id] = replace(
        old, attempts=old.attempts + 1, high_score=max(old.high_score, score)
    )
    return profile


def shuffle_options(quiz: Quiz, rng: random.Random) -> tuple[Quiz, list[list[int]]]:
    """Permute each question's options (off by default service-side).

    The result is itself a valid quiz with correct_index remapped, so
    grading a submission against the shuffled variant needs no translation.
    Also returns, per question, the shuffled-position -> original-index map.
    """
    questions = []
    mappings = []
    for question in quiz.questions:
        order = list(range(OPTIONS_PER_QUESTION))
        rng.shuffle(order)
        questions.append(
            replace(
                question,
                options=tuple(question.options[i] for i in order),
                correct_index=order.index(question.correct_index),
            )
        )
        mappings.append(order)
    return replace(quiz, questions=tuple(questions)), mappings
