"""FastAPI application exposing the game engines over HTTP/JSON.

The server owns all game rules: clients post moves and render the session
snapshots that come back, so scores can't be forged client-side. Profile
mutations are serialized per profile; the engines themselves are pure
values, so concurrent sessions never interfere.
"""

from __future__ import annotations

import json
import random
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from fastapi import Depends, FastAPI, Header, HTTPException, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import bloch as bloch_game
from .. import circuits as circuits_game
from .. import entanglement as ent_game
from .. import progression, quiz as quiz_engine
from ..content import (
    ContentBundle,
    MoveError,
    parse_action,
    parse_circuit_move,
    parse_gate,
)
from ..errors import EngineError, InvalidMove, NotWonYet, SessionFinished
from ..progression import NicknameError, PlayerProfile
from ..quantum import (
    Gate,
    GateKind,
    bloch_coordinates,
    classify_matrix,
    color_class_to_json,
    gate_matrix,
    lift_single_qubit_gate,
    matrix_to_json,
    state_to_json,
)
from .storage import ProfileStore

LEVELS_PER_GAME = progression.LEVELS_PER_GAME


@dataclass
class ActiveSession:
    session_id: str
    game_id: str
    level_id: int
    engine: Any
    awarded: bool = False
    awarded_points: Optional[int] = None
    score: Optional[int] = None


@dataclass
class SessionRegistry:
    """One active session per (profile, game, level); replaced on restart."""

    sessions: dict[tuple[str, str, int], ActiveSession] = field(default_factory=dict)
    # last quiz variant served per (profile, quiz): grading target when
    # option shuffling is enabled
    quiz_variants: dict[tuple[str, str], Any] = field(default_factory=dict)
    guard: threading.Lock = field(default_factory=threading.Lock)

    def put(self, profile_id: str, record: ActiveSession) -> None:
        with self.guard:
            self.sessions[(profile_id, record.game_id, record.level_id)] = record

    def get(self, profile_id: str, game_id: str, level_id: int) -> Optional[ActiveSession]:
        with self.guard:
            return self.sessions.get((profile_id, game_id, level_id))

    def put_quiz_variant(self, profile_id: str, quiz_id: str, quiz: Any) -> None:
        with self.guard:
            self.quiz_variants[(profile_id, quiz_id)] = quiz

    def quiz_variant(self, profile_id: str, quiz_id: str) -> Optional[Any]:
        with self.guard:
            return self.quiz_variants.get((profile_id, quiz_id))


def _bloch_view(record: ActiveSession, session) -> dict:
    level = session.level
    point = bloch_coordinates(session.current_state)
    target_point = bloch_coordinates(level.target_state)
    return {
        "session_id": record.session_id,
        "game_id": "bloch",
        "level_id": level.id,
        "status": session.status.value,
        "moves": [g.name for g in session.moves],
        "move_count": len(session.moves),
        "current_state": state_to_json(session.current_state),
        "current_bloch": {"x": point.x, "y": point.y, "z": point.z},
        "target_state": state_to_json(level.target_state),
        "target_bloch": {"x": target_point.x, "y": target_point.y, "z": target_point.z},
        "allowed_gates": sorted(k.value for k in level.allowed_gates),
        "min_solution_length": level.min_solution_length,
        "intro_popup": level.intro_popup,
        "hint": level.hint,
        "tooltips": dict(level.tooltips),
    }


def _entanglement_view(record: ActiveSession, session) -> dict:
    level = session.level
    return {
        "session_id": record.session_id,
        "game_id": "entanglement",
        "level_id": level.id,
        "status": session.status.value,
        "position": session.position,
        "course_length": len(level.course_a),
        "synced_count": session.synced_count,
        "wrong_count": session.wrong_count,
        "decoherence": session.decoherence,
        "decoherence_enabled": level.decoherence_enabled,
        "wrong_move_limit": level.wrong_move_limit,
        "mode": level.mode.value,
        "course_a": [
            {"required_action": o.required_action.value, "label": o.label}
            for o in level.course_a.obstacles
        ],
        "course_b": [
            {"required_action": o.required_action.value, "label": o.label}
            for o in level.course_b.obstacles
        ],
        "intro_popup": level.intro_popup,
    }


def _grid_view(grid) -> list[dict]:
    columns = []
    for column in grid:
        if column.cnot is not None:
            columns.append({"cnot": {"control": column.cnot[0], "target": column.cnot[1]}})
        else:
            columns.append(
                {"singles": [kind.value if kind else None for kind in column.singles]}
            )
    return columns


def _gate_tooltip_matrices(level) -> dict:
    """Each allowed gate's lifted 4x4 matrix, shown alongside tooltip text."""
    out: dict = {}
    for kind in sorted(level.allowed_gates, key=lambda k: k.value):
        if kind == GateKind.CNOT:
            out["CNOT"] = {
                "control0": matrix_to_json(gate_matrix(Gate(kind, 0, 1), 2)),
                "control1": matrix_to_json(gate_matrix(Gate(kind, 1, 0), 2)),
            }
        else:
            out[kind.value] = {
                "wire0": matrix_to_json(lift_single_qubit_gate(Gate(kind), 0)),
                "wire1": matrix_to_json(lift_single_qubit_gate(Gate(kind), 1)),
            }
    return out


def _circuits_view(record: ActiveSession, session) -> dict:
    level = session.level
    matrix, output, colors = circuits_game.evaluate(session)
    fish = session.fish
    return {
        "session_id": record.session_id,
        "game_id": "circuits",
        "level_id": level.id,
        "status": session.status.value,
        "grid": _grid_view(session.grid),
        "circuit_matrix": matrix_to_json(matrix),
        "output_state": state_to_json(output),
        "colored_matrix": [[color_class_to_json(c) for c in row] for row in colors],
        "input_state": state_to_json(level.input_state),
        "target_matrix": matrix_to_json(level.target_matrix),
        "target_state": state_to_json(level.target_state),
        "target_colored_matrix": [
            [color_class_to_json(c) for c in row]
            for row in classify_matrix(level.target_matrix)
        ],
        "fish_remaining": fish.fish_remaining,
        "points_remaining": fish.points_remaining,
        "outfit_stage": fish.outfit_stage,
        "penalty_enabled": level.penalty_enabled,
        "allowed_gates": sorted(k.value for k in level.allowed_gates),
        "max_columns": level.max_columns,
        "intro_popup": level.intro_popup,
        "hint": level.hint,
        "tooltips": dict(level.tooltips),
        "tooltip_matrices": _gate_tooltip_matrices(level),
    }


_VIEW_BUILDERS = {
    "bloch": _bloch_view,
    "entanglement": _entanglement_view,
    "circuits": _circuits_view,
}


def session_view(record: ActiveSession) -> dict:
    view = _VIEW_BUILDERS[record.game_id](record, record.engine)
    if record.score is not None:
        view["score"] = record.score
    if record.awarded_points is not None:
        view["awarded_points"] = record.awarded_points
    return view


def quiz_view(quiz: quiz_engine.Quiz) -> dict:
    """Client-facing quiz payload; correct answers never leave the server."""
    return {
        "id": quiz.id,
        "kind": quiz.kind.value,
        "questions": [
            {
                "id": question.id,
                "prompt": question.prompt,
                "options": list(question.options),
                "allow_idk": question.allow_idk,
            }
            for question in quiz.questions
        ],
    }


def profile_view(profile: PlayerProfile) -> dict:
    return {
        "profile_id": profile.profile_id,
        "nickname": profile.nickname,
        "total_points": profile.total_points,
        "completed": {
            game: sorted(profile.completed.get(game, set()))
            for game in progression.GAME_IDS
        },
        "jester_outfits": sorted(profile.jester_outfits),
        "circuits_unlocked": progression.is_circuits_unlocked(profile),
        "quiz_records": {
            quiz_id: {"attempts": record.attempts, "high_score": record.high_score}
            for quiz_id, record in sorted(profile.quiz_records.items())
        },
    }


def create_app(
    content: ContentBundle,
    store: ProfileStore,
    static_dir: Optional[Path] = None,
    request_log: bool = True,
    shuffle_quiz_options: bool = False,
) -> FastAPI:
    app = FastAPI(title="qubitcat game service", docs_url=None, redoc_url=None)
    registry = SessionRegistry()

    if request_log:

        @app.middleware("http")
        async def log_requests(request: Request, call_next):
            started = time.monotonic()
            response = await call_next(request)
            elapsed_ms = round((time.monotonic() - started) * 1000, 2)
            print(
                json.dumps(
                    {
                        "method": request.method,
                        "path": request.url.path,
                        "status": response.status_code,
                        "ms": elapsed_ms,
                    }
                ),
                flush=True,
            )
            return response

    def authenticate(authorization: str = Header(default="")) -> PlayerProfile:
        if not authorization.startswith("Bearer "):
            raise HTTPException(401, "missing bearer token")
        profile = store.by_token(authorization.removeprefix("Bearer ").strip())
        if profile is None:
            raise HTTPException(401, "unknown token")
        return profile

    def get_level(game_id: str, level_id: int):
        try:
            levels = content.levels_for(game_id)
        except Exception:
            raise HTTPException(404, f"unknown game {game_id!r}") from None
        level = levels.get(level_id)
        if level is None:
            raise HTTPException(404, f"{game_id} has no level {level_id}")
        return level

    def level_unlocked(profile: PlayerProfile, game_id: str, level_id: int) -> bool:
        if game_id == "circuits" and not progression.is_circuits_unlocked(profile):
            return False
        completed = profile.completed.get(game_id, set())
        return level_id == 1 or (level_id - 1) in completed or level_id in completed

    @app.post("/api/profiles", status_code=201)
    def create_profile(body: dict) -> dict:
        nickname = body.get("nickname", "")
        try:
            profile = store.create(nickname)
        except NicknameError as exc:
            raise HTTPException(400, str(exc)) from exc
        return {
            "profile_id": profile.profile_id,
            "token": profile.token,
            "nickname": profile.nickname,
        }

    @app.get("/api/profile")
    def get_profile(profile: PlayerProfile = Depends(authenticate)) -> dict:
        return profile_view(profile)

    @app.get("/api/games")
    def list_games(profile: PlayerProfile = Depends(authenticate)) -> list[dict]:
        games = []
        for game_id in progression.GAME_IDS:
            unlocked = (
                progression.is_circuits_unlocked(profile)
                if game_id == "circuits"
                else True
            )
            games.append(
                {
                    "game_id": game_id,
                    "unlocked": unlocked,
                    "levels_completed": len(profile.completed.get(game_id, set())),
                    "total": LEVELS_PER_GAME,
                }
            )
        return games

    @app.get("/api/games/{game_id}/levels")
    def list_levels(
        game_id: str, profile: PlayerProfile = Depends(authenticate)
    ) -> list[dict]:
        try:
            levels = content.levels_for(game_id)
        except Exception:
            raise HTTPException(404, f"unknown game {game_id!r}") from None
        completed = profile.completed.get(game_id, set())
        return [
            {
                "level_id": level_id,
                "unlocked": level_unlocked(profile, game_id, level_id),
                "completed": level_id in completed,
            }
            for level_id in sorted(levels)
        ]

    def start_engine_session(game_id: str, level) -> Any:
        if game_id == "bloch":
            return bloch_game.start_level(level)
        if game_id == "entanglement":
            return ent_game.start_level(level)
        return circuits_game.start_level(level)

    @app.post("/api/games/{game_id}/levels/{level_id}/session", status_code=201)
    def open_session(
        game_id: str,
        level_id: int,
        profile: PlayerProfile = Depends(authenticate),
    ) -> dict:
        level = get_level(game_id, level_id)
        if not level_unlocked(profile, game_id, level_id):
            raise HTTPException(403, f"{game_id} level {level_id} is locked")
        record = ActiveSession(
            session_id=secrets.token_hex(8),
            game_id=game_id,
            level_id=level_id,
            engine=start_engine_session(game_id, level),
        )
        registry.put(profile.profile_id, record)
        return session_view(record)

    def advance_engine(record: ActiveSession, move: dict) -> None:
        if record.game_id == "bloch":
            record.engine = bloch_game.apply_player_gate(record.engine, parse_gate(move))
        elif record.game_id == "entanglement":
            record.engine = ent_game.step(record.engine, parse_action(move))
        else:
            parsed = parse_circuit_move(move)
            if parsed.op == "place":
                record.engine = circuits_game.place_gate(
                    record.engine, parsed.gate, parsed.column, parsed.wire
                )
            else:
                record.engine = circuits_game.remove_gate(
                    record.engine, parsed.column, parsed.wire
                )

    def engine_score(record: ActiveSession) -> int:
        if record.game_id == "bloch":
            return bloch_game.level_score(record.engine)
        if record.game_id == "entanglement":
            return ent_game.level_score(record.engine)
        return circuits_game.level_score(record.engine)

    @app.post("/api/games/{game_id}/levels/{level_id}/session/moves")
    def post_move(
        game_id: str,
        level_id: int,
        body: dict,
        profile: PlayerProfile = Depends(authenticate),
    ) -> dict:
        get_level(game_id, level_id)
        if not level_unlocked(profile, game_id, level_id):
            raise HTTPException(403, f"{game_id} level {level_id} is locked")
        record = registry.get(profile.profile_id, game_id, level_id)
        if record is None:
            raise HTTPException(404, "no open session; create one first")
        move = body.get("move", body)
        try:
            advance_engine(record, move)
        except SessionFinished as exc:
            raise HTTPException(409, str(exc)) from exc
        except (MoveError, InvalidMove) as exc:
            raise HTTPException(422, str(exc)) from exc

        if record.engine.status.value == "Won" and not record.awarded:
            # exactly one award per session, no matter how the client retries
            record.score = engine_score(record)
            with store.lock(profile.profile_id):
                fresh = store.load(profile.profile_id)
                _, awarded = progression.award_points(
                    fresh, game_id, level_id, record.score
                )
                progression.check_rewards(fresh)
                store.save(fresh)
            record.awarded = True
            record.awarded_points = awarded
        return session_view(record)

    @app.get("/api/quizzes")
    def list_quizzes(profile: PlayerProfile = Depends(authenticate)) -> list[dict]:
        out = []
        for quiz_id in sorted(content.quizzes):
            quiz = content.quizzes[quiz_id]
            record = profile.quiz_records.get(quiz_id)
            out.append(
                {
                    "id": quiz.id,
                    "kind": quiz.kind.value,
                    "questions": len(quiz.questions),
                    "attempts": record.attempts if record else 0,
                    "high_score": record.high_score if record else 0,
                }
            )
        return out

    @app.get("/api/quizzes/{quiz_id}")
    def get_quiz(quiz_id: str, profile: PlayerProfile = Depends(authenticate)) -> dict:
        quiz = content.quizzes.get(quiz_id)
        if quiz is None:
            raise HTTPException(404, f"unknown quiz {quiz_id!r}")
        if shuffle_quiz_options:
            # each fetch deals a fresh option order; submissions grade
            # against the variant this profile was last shown
            rng = random.Random(secrets.randbits(64))
            quiz, _ = quiz_engine.shuffle_options(quiz, rng)
            registry.put_quiz_variant(profile.profile_id, quiz_id, quiz)
        return quiz_view(quiz)

    @app.post("/api/quizzes/{quiz_id}/submit")
    def submit_quiz(
        quiz_id: str,
        body: dict,
        profile: PlayerProfile = Depends(authenticate),
    ) -> dict:
        quiz = content.quizzes.get(quiz_id)
        if quiz is None:
            raise HTTPException(404, f"unknown quiz {quiz_id!r}")
        if shuffle_quiz_options:
            variant = registry.quiz_variant(profile.profile_id, quiz_id)
            if variant is not None:
                quiz = variant
        answers = body.get("answers")
        if not isinstance(answers, list):
            raise HTTPException(422, "body must carry an 'answers' list")
        try:
            score, results = quiz_engine.grade(quiz, answers)
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        with store.lock(profile.profile_id):
            fresh = store.load(profile.profile_id)
            quiz_engine.record_attempt(fresh, quiz_id, score)
            store.save(fresh)
            record = fresh.quiz_records[quiz_id]
        per_question = []
        for result in results:
            item: dict = {"correct": result.correct}
            if result.reveal is not None:
                item["reveal"] = result.reveal
            per_question.append(item)
        return {
            "quiz_id": quiz_id,
            "score": score,
            "out_of": len(quiz.questions),
            "per_question": per_question,
            "attempts": record.attempts,
            "high_score": record.high_score,
        }

    @app.exception_handler(EngineError)
    def engine_error_handler(request: Request, exc: EngineError) -> Response:
        status = 409 if isinstance(exc, (SessionFinished, NotWonYet)) else 422
        return JSONResponse({"detail": str(exc)}, status_code=status)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
