"""qq: authoring, verification, and serving CLI.

Subcommands:
  qq validate-all  - schema + solvability checks over all shipped content
  qq solve FILE    - shortest solution for a bloch or circuit level
  qq simulate GAME LEVEL_FILE SCRIPT - headless replay, printing a transcript
  qq serve         - run the HTTP game service

Exit codes: 0 ok, 1 content error, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import bloch as bloch_game
from . import circuits as circuits_game
from . import entanglement as ent_game
from .content import (
    ContentError,
    MoveError,
    load_bloch_level,
    load_circuit_level,
    load_content,
    load_entanglement_level,
    parse_action,
    parse_circuit_move,
    parse_gate,
)
from .errors import EngineError
from .quantum import bloch_coordinates
from .solver import DEFAULT_MAX_DEPTH, solve_level
from .validator import validate_all

CONTENT_ERROR = 1


@click.group()
def main() -> None:
    """Cat-themed quantum mini-games: content tools and game server."""


@main.command("validate-all")
@click.option("--levels-dir", default="levels", show_default=True, type=click.Path())
@click.option("--quizzes-dir", default="quizzes", show_default=True, type=click.Path())
@click.option("--max-depth", default=DEFAULT_MAX_DEPTH, show_default=True)
def validate_all_cmd(levels_dir: str, quizzes_dir: str, max_depth: int) -> None:
    """Validate every shipped level and quiz bank."""
    report = validate_all(Path(levels_dir), Path(quizzes_dir), max_depth)
    for violation in report.violations:
        click.echo(f"VIOLATION: {violation}")
    click.echo(
        f"checked {report.checked_levels} levels and "
        f"{report.checked_quizzes} quiz banks: "
        + ("ok" if report.ok else f"{len(report.violations)} violation(s)")
    )
    if not report.ok:
        sys.exit(CONTENT_ERROR)


def _load_any_level(path: Path):
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise click.UsageError(f"{path}: file not found")
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"{path}: invalid JSON ({exc})")
    if "course_a" in data:
        return "entanglement", load_entanglement_level(path)
    if "target_matrix" in data:
        return "circuits", load_circuit_level(path)
    return "bloch", load_bloch_level(path)


@main.command("solve")
@click.argument("level_file", type=click.Path(path_type=Path))
@click.option("--max-depth", default=DEFAULT_MAX_DEPTH, show_default=True)
def solve_cmd(level_file: Path, max_depth: int) -> None:
    """Find a shortest solution for a bloch or circuit level file."""
    try:
        game_id, level = _load_any_level(level_file)
    except ContentError as exc:
        click.echo(f"VIOLATION: {exc}")
        sys.exit(CONTENT_ERROR)
    if game_id == "entanglement":
        script = ent_game.perfect_script(level)
        click.echo(f"solution length {len(script)}")
        for i, action in enumerate(script, 1):
            click.echo(f"  {i}. {action.value}")
        return
    result = solve_level(level, max_depth)
    if result is None:
        click.echo(f"NOT FOUND: no solution within depth {max_depth}")
        sys.exit(CONTENT_ERROR)
    click.echo(f"solution length {result.length}")
    for i, move in enumerate(result.description, 1):
        click.echo(f"  {i}. {move}")


def _simulate_bloch(level, moves) -> None:
    session = bloch_game.start_level(level)
    for i, move in enumerate(moves, 1):
        gate = parse_gate(move, where=f"move {i}")
        session = bloch_game.apply_player_gate(session, gate)
        point = bloch_coordinates(session.current_state)
        click.echo(
            f"{i}. {gate.name} -> ({point.x:+.4f}, {point.y:+.4f}, {point.z:+.4f})"
        )
    if session.status is bloch_game.Status.WON:
        click.echo(f"Won, score {bloch_game.level_score(session)}")
    else:
        click.echo(session.status.value)


def _simulate_entanglement(level, moves) -> None:
    session = ent_game.start_level(level)
    for i, move in enumerate(moves, 1):
        action = parse_action(move, where=f"move {i}")
        before = session.synced_count
        session = ent_game.step(session, action)
        outcome = "synced" if session.synced_count > before else "wrong"
        click.echo(
            f"{i}. {action.value} -> {outcome}, position {session.position}, "
            f"decoherence {session.decoherence}"
        )
    click.echo(f"synced {session.synced_count}, wrong {session.wrong_count}")
    if session.status is ent_game.Status.WON:
        click.echo(f"Won, score {ent_game.level_score(session)}")
    else:
        click.echo(session.status.value)


def _simulate_circuits(level, moves) -> None:
    session = circuits_game.start_level(level)
    for i, move in enumerate(moves, 1):
        parsed = parse_circuit_move(move, where=f"move {i}")
        if parsed.op == "place":
            session = circuits_game.place_gate(
                session, parsed.gate, parsed.column, parsed.wire
            )
            wire_note = f" wire {parsed.wire}" if parsed.wire is not None else ""
            note = f"place {parsed.gate} column {parsed.column}{wire_note}"
        else:
            session = circuits_game.remove_gate(session, parsed.column, parsed.wire)
            note = f"remove column {parsed.column} wire {parsed.wire}"
        fish = session.fish
        click.echo(
            f"{i}. {note} -> fish {fish.fish_remaining}, points "
            f"{fish.points_remaining}, outfit {fish.outfit_stage}"
        )
        if session.status is not circuits_game.Status.IN_PROGRESS:
            break
    if session.status is circuits_game.Status.WON:
        click.echo(f"Won, score {circuits_game.level_score(session)}")
    else:
        click.echo(session.status.value)


@main.command("simulate")
@click.argument("game", type=click.Choice(["bloch", "entanglement", "circuits"]))
@click.argument("level_file", type=click.Path(path_type=Path))
@click.argument("script_file", type=click.Path(path_type=Path))
def simulate_cmd(game: str, level_file: Path, script_file: Path) -> None:
    """Replay a JSON move script through a level, printing a transcript."""
    loaders = {
        "bloch": load_bloch_level,
        "entanglement": load_entanglement_level,
        "circuits": load_circuit_level,
    }
    try:
        level = loaders[game](level_file)
        moves = json.loads(Path(script_file).read_text(encoding="utf-8"))
        if not isinstance(moves, list):
            raise ContentError(f"{script_file}: script must be a JSON list of moves")
    except (ContentError, FileNotFoundError, json.JSONDecodeError) as exc:
        click.echo(f"VIOLATION: {exc}")
        sys.exit(CONTENT_ERROR)
    click.echo(f"{game} level {level.id}")
    try:
        if game == "bloch":
            _simulate_bloch(level, moves)
        elif game == "entanglement":
            _simulate_entanglement(level, moves)
        else:
            _simulate_circuits(level, moves)
    except (EngineError, MoveError) as exc:
        click.echo(f"VIOLATION: {exc}")
        sys.exit(CONTENT_ERROR)


@main.command("serve")
@click.option("--port", default=8080, show_default=True, envvar="QQ_PORT")
@click.option("--host", default="127.0.0.1", show_default=True, envvar="QQ_HOST")
@click.option("--data-dir", default="data", show_default=True, envvar="QQ_DATA_DIR",
              type=click.Path(path_type=Path))
@click.option("--levels-dir", default="levels", show_default=True,
              envvar="QQ_LEVELS_DIR", type=click.Path(path_type=Path))
@click.option("--quizzes-dir", default="quizzes", show_default=True,
              envvar="QQ_QUIZZES_DIR", type=click.Path(path_type=Path))
@click.option("--static-dir", default=None, envvar="QQ_STATIC_DIR",
              type=click.Path(path_type=Path),
              help="Directory of built web-client assets served at /.")
@click.option("--shuffle-quiz-options", is_flag=True, default=False,
              help="Deal quiz options in a fresh order on every fetch.")
def serve_cmd(port, host, data_dir, levels_dir, quizzes_dir, static_dir,
              shuffle_quiz_options) -> None:
    """Run the HTTP game service."""
    import uvicorn

    from .service.app import create_app
    from .service.storage import ProfileStore

    try:
        content = load_content(levels_dir, quizzes_dir)
    except ContentError as exc:
        click.echo(f"VIOLATION: {exc}")
        sys.exit(CONTENT_ERROR)
    app = create_app(
        content,
        ProfileStore(data_dir),
        static_dir=static_dir,
        shuffle_quiz_options=shuffle_quiz_options,
    )
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
