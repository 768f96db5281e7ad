#!/usr/bin/env python3
"""Record API fixture payloads for the web client's contract tests.

Runs the real service in-process against a throwaway data dir and captures
the exact JSON the client will render, so the frontend tests pin their
expectations to genuine server output.
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from fastapi.testclient import TestClient

from qubitcat import solver
from qubitcat.content import load_content
from qubitcat.service.app import create_app
from qubitcat.service.storage import ProfileStore

FIXTURES = REPO / "frontend" / "tests" / "fixtures"


def write(name: str, payload) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / name).write_text(json.dumps(payload, indent=2) + "\n")
    print("wrote", name)


def win_bloch(client, auth, content, level_id):
    client.post(f"/api/games/bloch/levels/{level_id}/session", headers=auth)
    view = None
    for gate in solver.solve_bloch(content.bloch[level_id]):
        view = client.post(
            f"/api/games/bloch/levels/{level_id}/session/moves",
            json={"move": {"gate": gate.name}},
            headers=auth,
        ).json()
    return view


def win_circuits(client, auth, content, level_id):
    response = client.post(
        f"/api/games/circuits/levels/{level_id}/session", headers=auth
    )
    assert response.status_code == 201, response.text
    for placement in solver.solve_circuit(content.circuits[level_id]):
        move = {"op": "place", "gate": placement.gate.name, "column": placement.column}
        if placement.gate.name == "CNOT":
            move["control"] = placement.gate.control
            move["target"] = placement.gate.target
        else:
            move["wire"] = placement.wire
        view = client.post(
            f"/api/games/circuits/levels/{level_id}/session/moves",
            json={"move": move},
            headers=auth,
        ).json()
    assert view["status"] == "Won", view
    return view


def main() -> None:
    content = load_content(REPO / "levels", REPO / "quizzes")
    with tempfile.TemporaryDirectory() as tmp:
        app = create_app(content, ProfileStore(tmp), request_log=False)
        with TestClient(app) as client:
            def snapshot(auth):
                return {
                    "profile": client.get("/api/profile", headers=auth).json(),
                    "games": client.get("/api/games", headers=auth).json(),
                }

            created = client.post("/api/profiles", json={"nickname": "kea"}).json()
            auth = {"Authorization": f"Bearer {created['token']}"}
            write("profile_fresh.json", snapshot(auth))

            won_view = win_bloch(client, auth, content, 1)
            write("bloch_session_won.json", won_view)

            for level_id in range(2, 7):
                win_bloch(client, auth, content, level_id)
            write("profile_unlocked.json", snapshot(auth))

            for level_id in range(7, 13):
                win_bloch(client, auth, content, level_id)
            write("profile_jester.json", snapshot(auth))

            start = client.post(
                "/api/games/bloch/levels/2/session", headers=auth
            ).json()
            write("bloch_session_start.json", start)

            # H, S, H on one wire leaves gradient (mixed real+imaginary) cells;
            # circuits unlock sequentially, so clear levels 1-8 first
            for level_id in range(1, 9):
                win_circuits(client, auth, content, level_id)
            view = None
            client.post("/api/games/circuits/levels/9/session", headers=auth)
            # wire 1 keeps the session open (level 9's target lives on wire 0)
            for column, gate in enumerate(["H", "S", "H"]):
                view = client.post(
                    "/api/games/circuits/levels/9/session/moves",
                    json={"move": {"op": "place", "gate": gate, "column": column, "wire": 1}},
                    headers=auth,
                ).json()
            write("circuits_session_gradient.json", view)

            for level_id in range(1, 4):  # sequential unlock up to level 4
                client.post(
                    f"/api/games/entanglement/levels/{level_id}/session", headers=auth
                )
                for obstacle in content.entanglement[level_id].course_a.obstacles:
                    client.post(
                        f"/api/games/entanglement/levels/{level_id}/session/moves",
                        json={"move": {"action": obstacle.required_action.value}},
                        headers=auth,
                    )
            client.post("/api/games/entanglement/levels/4/session", headers=auth)
            level = content.entanglement[4]
            first = level.course_a[0].required_action.value
            wrong = "Pause" if first != "Pause" else "Jump"
            moves = [wrong, wrong, first]
            for action in moves:
                view = client.post(
                    "/api/games/entanglement/levels/4/session/moves",
                    json={"move": {"action": action}},
                    headers=auth,
                ).json()
            write("entanglement_session.json", view)

            write("quiz_bloch.json", client.get("/api/quizzes/bloch", headers=auth).json())
            write(
                "quiz_listing.json", client.get("/api/quizzes", headers=auth).json()
            )


if __name__ == "__main__":
    main()
