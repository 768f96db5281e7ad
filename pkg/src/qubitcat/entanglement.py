"""Entangled-cats agility course rules.

The player controls cat A; cat B is entangled and mirrors (correlated) or
opposes (anti-correlated) every action. A move where both cats clear their
obstacle is "synced": the pair advances and the decoherence meter drops.
A wrong move raises decoherence (or counts toward a wrong-move limit on
levels where the meter is disabled); maxing out the meter fails the level.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import NotWonYet, SessionFinished

DECOHERENCE_MAX = 100
WRONG_MOVE_DELTA = 20    # five consecutive wrong moves fail a level
SYNCED_MOVE_DELTA = -10
DEFAULT_WRONG_MOVE_LIMIT = 5


class Action(str, enum.Enum):
    JUMP = "Jump"
    CRAWL = "Crawl"
    BALANCE = "Balance"
    WEAVE = "Weave"
    CLIMB = "Climb"
    PAUSE = "Pause"


# fixed-point-free involution: each action's opposite under anti-correlation
ANTI_PARTNER = {
    Action.JUMP: Action.CRAWL,
    Action.CRAWL: Action.JUMP,
    Action.BALANCE: Action.WEAVE,
    Action.WEAVE: Action.BALANCE,
    Action.CLIMB: Action.PAUSE,
    Action.PAUSE: Action.CLIMB,
}


class Mode(str, enum.Enum):
    CORRELATED = "Correlated"
    ANTI_CORRELATED = "AntiCorrelated"


class Status(str, enum.Enum):
    IN_PROGRESS = "InProgress"
    WON = "Won"
    FAILED = "Failed"


@dataclass(frozen=True)
class Obstacle:
    required_action: Action
    label: str


@dataclass(frozen=True)
class Course:
    obstacles: tuple[Obstacle, ...]

    def __post_init__(self) -> None:
        if not self.obstacles:
            raise ValueError("a course needs at least one obstacle")

    def __len__(self) -> int:
        return len(self.obstacles)

    def __getitem__(self, index: int) -> Obstacle:
        return self.obstacles[index]


@dataclass(frozen=True)
class EntanglementLevel:
    id: int
    course_a: Course
    course_b: Course
    mode: Mode
    decoherence_enabled: bool
    wrong_move_limit: int = DEFAULT_WRONG_MOVE_LIMIT
    intro_popup: str | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.id <= 12:
            raise ValueError(f"level id must be 1..12, got {self.id}")
        if self.wrong_move_limit < 1:
            raise ValueError("wrong_move_limit must be >= 1")


@dataclass(frozen=True)
class EntanglementSession:
    level: EntanglementLevel
    position: int
    synced_count: int
    wrong_count: int
    decoherence: int
    status: Status

    @property
    def level_id(self) -> int:
        return self.level.id


def partner_action(action: Action, mode: Mode) -> Action:
    """What cat B does when cat A performs ``action``."""
    if mode is Mode.CORRELATED:
        return action
    return ANTI_PARTNER[action]


def start_level(level: EntanglementLevel) -> EntanglementSession:
    return EntanglementSession(
        level=level,
        position=0,
        synced_count=0,
        wrong_count=0,
        decoherence=0,
        status=Status.IN_PROGRESS,
    )


def step(session: EntanglementSession, player_action: Action) -> EntanglementSession:
    """Attempt the next obstacle pair with one action from cat A."""
    if session.status is not Status.IN_PROGRESS:
        raise SessionFinished(f"level already {session.status.value}")
    level = session.level
    pos = session.position
    a_ok = player_action == level.course_a[pos].required_action
    b_action = partner_action(player_action, level.mode)
    b_ok = b_action == level.course_b[pos].required_action

    if a_ok and b_ok:
        position = pos + 1
        decoherence = max(0, session.decoherence + SYNCED_MOVE_DELTA)
        status = Status.WON if position == len(level.course_a) else Status.IN_PROGRESS
        return replace(
            session,
            position=position,
            synced_count=session.synced_count + 1,
            decoherence=decoherence,
            status=status,
        )

    wrong_count = session.wrong_count + 1
    decoherence = session.decoherence
    failed = False
    if level.decoherence_enabled:
        decoherence = min(DECOHERENCE_MAX, decoherence + WRONG_MOVE_DELTA)
        failed = decoherence >= DECOHERENCE_MAX
    else:
        failed = wrong_count > level.wrong_move_limit
    return replace(
        session,
        wrong_count=wrong_count,
        decoherence=decoherence,
        status=Status.FAILED if failed else Status.IN_PROGRESS,
    )


def level_score(session: EntanglementSession) -> int:
    """Accuracy-scaled score out of 10, rounded half up, floor 1."""
    if session.status is not Status.WON:
        raise NotWonYet("score is only defined for a won session")
    total = session.synced_count + session.wrong_count
    score = math.floor(10 * session.synced_count / total + 0.5)
    return max(1, score)


def validate_level(level: EntanglementLevel) -> list[str]:
    """Content checks: course lengths, mode-by-level rule, solvability."""
    violations = []
    if len(level.course_a) != len(level.course_b):
        violations.append(
            f"level {level.id}: course lengths differ "
            f"({len(level.course_a)} vs {len(level.course_b)})"
        )
    expected_mode = Mode.CORRELATED if level.id <= 6 else Mode.ANTI_CORRELATED
    if level.mode is not expected_mode:
        violations.append(
            f"level {level.id}: mode {level.mode.value}, expected {expected_mode.value}"
        )
    for i in range(min(len(level.course_a), len(level.course_b))):
        want = partner_action(level.course_a[i].required_action, level.mode)
        got = level.course_b[i].required_action
        if got is not want:
            violations.append(
                f"level {level.id}: obstacle {i} is unsolvable "
                f"(course B requires {got.value}, partner action is {want.value})"
            )
    return violations


def perfect_script(level: EntanglementLevel) -> list[Action]:
    """The action sequence that clears every obstacle (cat A's course)."""
    return [obstacle.required_action for obstacle in level.course_a.obstacles]
