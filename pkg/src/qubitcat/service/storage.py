"""Flat-file profile persistence.

One JSON document per player under <data-dir>/profiles/<id>.json, written
atomically (temp file + rename) so a crash never leaves a torn document.
The serialization is canonical - sorted keys, sorted level ids, fixed
indentation - so load followed by save is byte-identical, and the stored
total is checked against the award ledger on every load.
"""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import threading
from collections import defaultdict
from pathlib import Path
from typing import Iterator, Optional

from ..progression import (
    GAME_IDS,
    AwardLedgerEntry,
    PlayerProfile,
    recompute_total,
    validate_nickname,
)
from ..quiz import QuizRecord


class StorageError(RuntimeError):
    pass


def profile_to_doc(profile: PlayerProfile) -> dict:
    return {
        "profile_id": profile.profile_id,
        "nickname": profile.nickname,
        "token": profile.token,
        "total_points": profile.total_points,
        "completed": {
            game: sorted(profile.completed.get(game, set())) for game in GAME_IDS
        },
        "jester_outfits": sorted(profile.jester_outfits),
        "quiz_records": {
            quiz_id: {"attempts": record.attempts, "high_score": record.high_score}
            for quiz_id, record in sorted(profile.quiz_records.items())
        },
        "award_ledger": [
            {
                "game_id": entry.game_id,
                "level_id": entry.level_id,
                "raw_score": entry.raw_score,
                "awarded": entry.awarded,
                "replay": entry.replay,
                "timestamp": entry.timestamp,
            }
            for entry in profile.award_ledger
        ],
    }


def profile_from_doc(doc: dict) -> PlayerProfile:
    profile = PlayerProfile(
        profile_id=doc["profile_id"],
        nickname=doc["nickname"],
        token=doc.get("token", ""),
        total_points=int(doc["total_points"]),
        completed={
            game: set(doc.get("completed", {}).get(game, [])) for game in GAME_IDS
        },
        jester_outfits=set(doc.get("jester_outfits", [])),
        quiz_records={
            quiz_id: QuizRecord(
                quiz_id=quiz_id,
                attempts=int(record["attempts"]),
                high_score=int(record["high_score"]),
            )
            for quiz_id, record in doc.get("quiz_records", {}).items()
        },
        award_ledger=[
            AwardLedgerEntry(
                game_id=entry["game_id"],
                level_id=int(entry["level_id"]),
                raw_score=int(entry["raw_score"]),
                awarded=int(entry["awarded"]),
                replay=bool(entry["replay"]),
                timestamp=entry["timestamp"],
            )
            for entry in doc.get("award_ledger", [])
        ],
    )
    ledger_total = recompute_total(profile)
    if ledger_total != profile.total_points:
        raise StorageError(
            f"profile {profile.profile_id}: stored total {profile.total_points} "
            f"does not match ledger total {ledger_total}"
        )
    return profile


def dump_profile(profile: PlayerProfile) -> str:
    return json.dumps(profile_to_doc(profile), indent=2, sort_keys=True) + "\n"


class ProfileStore:
    """Profiles on disk plus a token index; one write lock per profile."""

    def __init__(self, data_dir: Path | str):
        self.profiles_dir = Path(data_dir) / "profiles"
        self.profiles_dir.mkdir(parents=True, exist_ok=True)
        self._locks: defaultdict[str, threading.Lock] = defaultdict(threading.Lock)
        self._locks_guard = threading.Lock()
        self._token_index: dict[str, str] = {}
        for path in self.profiles_dir.glob("*.json"):
            doc = json.loads(path.read_text(encoding="utf-8"))
            if doc.get("token"):
                self._token_index[doc["token"]] = doc["profile_id"]

    def _path(self, profile_id: str) -> Path:
        return self.profiles_dir / f"{profile_id}.json"

    def lock(self, profile_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks[profile_id]

    def create(self, nickname: str) -> PlayerProfile:
        validate_nickname(nickname)
        profile = PlayerProfile(
            profile_id=secrets.token_hex(8),
            nickname=nickname,
            token=secrets.token_urlsafe(32),  # 256 bits
        )
        self.save(profile)
        self._token_index[profile.token] = profile.profile_id
        return profile

    def load(self, profile_id: str) -> PlayerProfile:
        path = self._path(profile_id)
        if not path.exists():
            raise KeyError(profile_id)
        return profile_from_doc(json.loads(path.read_text(encoding="utf-8")))

    def save(self, profile: PlayerProfile) -> None:
        payload = dump_profile(profile)
        fd, tmp = tempfile.mkstemp(
            dir=self.profiles_dir, prefix=f".{profile.profile_id}.", suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload)
            os.replace(tmp, self._path(profile.profile_id))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def by_token(self, token: str) -> Optional[PlayerProfile]:
        profile_id = self._token_index.get(token)
        if profile_id is None:
            return None
        try:
            return self.load(profile_id)
        except KeyError:
            return None

    def profile_ids(self) -> Iterator[str]:
        for path in sorted(self.profiles_dir.glob("*.json")):
            yield path.stem
