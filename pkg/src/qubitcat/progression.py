"""Cross-game player profile: points, replay halving, unlocks, rewards.

Points accumulate across all mini-games; every award is recorded in a
ledger so the stored total can always be recomputed and verified. A replay
of an already-completed level earns half the points (floored). The circuits
game stays locked until six Bloch levels are completed, and finishing all
twelve levels of a game unlocks that cat's jester outfit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from .quiz import QuizRecord

GAME_IDS = ("bloch", "entanglement", "circuits")
LEVELS_PER_GAME = 12
CIRCUITS_UNLOCK_THRESHOLD = 6  # completed Bloch levels
MAX_NICKNAME_LENGTH = 20


class NicknameError(ValueError):
    pass


def validate_nickname(nickname: str) -> str:
    if not isinstance(nickname, str) or not nickname.strip():
        raise NicknameError("nickname must contain at least one visible character")
    if len(nickname) > MAX_NICKNAME_LENGTH:
        raise NicknameError(f"nickname longer than {MAX_NICKNAME_LENGTH} characters")
    return nickname


@dataclass(frozen=True)
class AwardLedgerEntry:
    game_id: str
    level_id: int
    raw_score: int
    awarded: int
    replay: bool
    timestamp: str

    def __post_init__(self) -> None:
        expected = self.raw_score // 2 if self.replay else self.raw_score
        if self.awarded != expected:
            raise ValueError("awarded points inconsistent with replay rule")


@dataclass
class PlayerProfile:
    profile_id: str
    nickname: str
    token: str = ""
    total_points: int = 0
    completed: dict[str, set[int]] = field(
        default_factory=lambda: {game: set() for game in GAME_IDS}
    )
    jester_outfits: set[str] = field(default_factory=set)
    quiz_records: dict[str, QuizRecord] = field(default_factory=dict)
    award_ledger: list[AwardLedgerEntry] = field(default_factory=list)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def award_points(
    profile: PlayerProfile,
    game_id: str,
    level_id: int,
    raw_score: int,
    timestamp: Optional[str] = None,
) -> tuple[PlayerProfile, int]:
    """Record a win: full points on first completion, half (floored) on replay."""
    if game_id not in GAME_IDS:
        raise ValueError(f"unknown game {game_id!r}")
    if not 1 <= level_id <= LEVELS_PER_GAME:
        raise ValueError(f"level id must be 1..{LEVELS_PER_GAME}")
    if not 0 <= raw_score <= 10:
        raise ValueError("raw_score must be 0..10")
    replay = level_id in profile.completed[game_id]
    awarded = raw_score // 2 if replay else raw_score
    profile.award_ledger.append(
        AwardLedgerEntry(
            game_id=game_id,
            level_id=level_id,
            raw_score=raw_score,
            awarded=awarded,
            replay=replay,
            timestamp=timestamp or _now(),
        )
    )
    profile.completed[game_id].add(level_id)
    profile.total_points += awarded
    return profile, awarded


def recompute_total(profile: PlayerProfile) -> int:
    return sum(entry.awarded for entry in profile.award_ledger)


def is_circuits_unlocked(profile: PlayerProfile) -> bool:
    return len(profile.completed["bloch"]) >= CIRCUITS_UNLOCK_THRESHOLD


def check_rewards(profile: PlayerProfile) -> PlayerProfile:
    """Grant the jester outfit for every fully completed game; idempotent."""
    for game_id in GAME_IDS:
        if len(profile.completed[game_id]) >= LEVELS_PER_GAME:
            profile.jester_outfits.add(game_id)
    return profile
