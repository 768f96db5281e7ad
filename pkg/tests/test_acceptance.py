"""Acceptance suite: one test per release criterion.

Each test enforces its stated tolerance; the conftest terminal hook prints
one PASS/FAIL line per criterion at the end of the run. The numerical
oracles here are test-local (raw numpy) so they stay independent of the
implementation they check.
"""

import json
import math
import random
import time

import numpy as np
import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from qubitcat import progression, quantum as q, quiz as qz, solver
from qubitcat.cli import main as qq
from qubitcat.circuits import FishState, Status as CircuitStatus
from qubitcat.entanglement import Action, Mode, partner_action
from qubitcat.progression import PlayerProfile
from qubitcat.quantum import Gate, GateKind, StateVector
from qubitcat.service.app import create_app
from qubitcat.service.storage import ProfileStore, dump_profile, profile_from_doc
from qubitcat.validator import validate_all
from qubitcat import circuits as circuits_game

RNG_SEED = 20240817

_I = np.eye(2, dtype=complex)
_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_GATES_2x2 = {
    "X": _PAULI["x"],
    "Y": _PAULI["y"],
    "Z": _PAULI["z"],
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
}

ROSTER = [q.X, q.Y, q.Z, q.H, q.S]


def random_circuit(rng, num_qubits, length):
    gates = []
    for _ in range(length):
        if num_qubits == 2 and rng.random() < 0.3:
            control = int(rng.integers(0, 2))
            gates.append((q.cnot(control, 1 - control), None))
        else:
            gate = ROSTER[rng.integers(0, len(ROSTER))]
            wire = int(rng.integers(0, num_qubits)) if num_qubits == 2 else None
            gates.append((gate, wire))
    return gates


def oracle_lift(gate, wire, num_qubits):
    if gate.kind == GateKind.CNOT:
        mat = np.zeros((4, 4), dtype=complex)
        for col in range(4):
            bits = [(col >> 1) & 1, col & 1]
            if bits[gate.control]:
                bits[gate.target] ^= 1
            mat[2 * bits[0] + bits[1], col] = 1.0
        return mat
    g = _GATES_2x2[gate.kind.value]
    if num_qubits == 1:
        return g
    return np.kron(g, _I) if wire == 0 else np.kron(_I, g)


def test_unitarity_suite():
    """All rostered gates and 1,000 random circuits are unitary within 1e-9."""
    started = time.monotonic()
    for gate in ROSTER:
        mat = q.gate_matrix(gate, 1).entries
        assert np.max(np.abs(mat.conj().T @ mat - np.eye(2))) < 1e-9
    for cn in (q.cnot(0, 1), q.cnot(1, 0)):
        mat = q.gate_matrix(cn, 2).entries
        assert np.max(np.abs(mat.conj().T @ mat - np.eye(4))) < 1e-9
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(1000):
        num_qubits = int(rng.integers(1, 3))
        circuit = random_circuit(rng, num_qubits, int(rng.integers(0, 9)))
        mat = q.compose_circuit(circuit, num_qubits).entries
        eye = np.eye(2**num_qubits)
        assert np.max(np.abs(mat.conj().T @ mat - eye)) < 1e-9
    assert time.monotonic() - started < 5.0


def test_oracle_equivalence():
    """compose_circuit agrees with an independent fold-apply oracle, 1e-9."""
    rng = np.random.default_rng(RNG_SEED + 1)
    for _ in range(1000):
        num_qubits = int(rng.integers(1, 3))
        dim = 2**num_qubits
        circuit = random_circuit(rng, num_qubits, int(rng.integers(0, 9)))
        composed = q.compose_circuit(circuit, num_qubits).entries
        vec = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        vec /= np.linalg.norm(vec)
        folded = vec
        for gate, wire in circuit:
            folded = oracle_lift(gate, wire, num_qubits) @ folded
        assert np.max(np.abs(composed @ vec - folded)) < 1e-9


def test_bloch_mapping():
    """Random pure states land on the unit sphere; axis states hit the axes."""
    rng = np.random.default_rng(RNG_SEED + 2)
    for _ in range(1000):
        vec = rng.normal(size=2) + 1j * rng.normal(size=2)
        state = StateVector(vec / np.linalg.norm(vec))
        point = q.bloch_coordinates(state)
        assert abs(point.x**2 + point.y**2 + point.z**2 - 1.0) < 1e-9
        # independent oracle: Pauli expectation values
        psi = state.amplitudes
        for axis, coord in zip("xyz", point.as_tuple()):
            expected = float(np.real(np.conj(psi) @ _PAULI[axis] @ psi))
            assert abs(coord - expected) < 1e-9

    ket0 = StateVector.ket("0")
    ket1 = StateVector.ket("1")
    h0 = q.apply_gate(ket0, q.H)
    h1 = q.apply_gate(ket1, q.H)
    sh0 = q.apply_gate(h0, q.S)
    sh1 = q.apply_gate(h1, q.S)
    expected_axes = [
        (ket0, (0, 0, 1)),
        (ket1, (0, 0, -1)),
        (h0, (1, 0, 0)),
        (h1, (-1, 0, 0)),
        (sh0, (0, 1, 0)),
        (sh1, (0, -1, 0)),
    ]
    for state, axis in expected_axes:
        point = q.bloch_coordinates(state)
        assert max(abs(a - b) for a, b in zip(point.as_tuple(), axis)) < 1e-9


def test_content_gate(levels_dir, quizzes_dir):
    """qq validate-all exits 0 on the 36 shipped levels and 4 quiz banks."""
    result = CliRunner().invoke(
        qq,
        [
            "validate-all",
            "--levels-dir", str(levels_dir),
            "--quizzes-dir", str(quizzes_dir),
        ],
    )
    assert result.exit_code == 0, result.output
    report = validate_all(levels_dir, quizzes_dir)
    assert report.ok
    assert report.checked_levels == 36
    assert report.checked_quizzes == 4


def test_rules_fixtures(levels_dir, tmp_path, content):
    """Golden gameplay fixtures for all three engines."""
    # X wins Bloch level 1
    script = tmp_path / "x.json"
    script.write_text(json.dumps([{"gate": "X"}]))
    result = CliRunner().invoke(
        qq,
        ["simulate", "bloch", str(levels_dir / "bloch" / "01.json"), str(script)],
    )
    assert result.exit_code == 0
    assert result.output.strip().splitlines()[-1] == "Won, score 10"

    # anti-correlated pairing
    assert partner_action(Action.JUMP, Mode.ANTI_CORRELATED) is Action.CRAWL
    assert partner_action(Action.BALANCE, Mode.ANTI_CORRELATED) is Action.WEAVE
    assert partner_action(Action.CLIMB, Mode.ANTI_CORRELATED) is Action.PAUSE

    # circuits: one removal on a penalty level costs exactly one fish + one point
    session = circuits_game.start_level(content.circuits[2])
    session = circuits_game.place_gate(session, q.X, 0, wire=0)
    session = circuits_game.remove_gate(session, 0, 0)
    assert session.fish.fish_remaining == 8
    assert session.fish.points_remaining == 9

    # outfit stage tracks floor(lost/3); nine removals exhaust
    session = circuits_game.start_level(content.circuits[2])
    for i in range(1, 10):
        session = circuits_game.place_gate(session, q.X, 0, wire=0)
        session = circuits_game.remove_gate(session, 0, 0)
        assert session.fish.outfit_stage == i // 3
    assert session.status is CircuitStatus.EXHAUSTED

    # level 1 removals are penalty-free (wire 1 placements never win level 1)
    session = circuits_game.start_level(content.circuits[1])
    for _ in range(12):
        session = circuits_game.place_gate(session, q.X, 0, wire=1)
        session = circuits_game.remove_gate(session, 0, 1)
    assert session.fish == FishState(9, 10, 0)
    assert session.status is CircuitStatus.IN_PROGRESS


def test_progression():
    """Unlock boundary, replay halving, ledger consistency, quiz isolation."""
    profile = PlayerProfile(profile_id="a", nickname="n")
    for level in range(1, 6):
        progression.award_points(profile, "bloch", level, 10)
    assert not progression.is_circuits_unlocked(profile)
    progression.award_points(profile, "bloch", 6, 10)
    assert progression.is_circuits_unlocked(profile)

    _, awarded = progression.award_points(profile, "bloch", 3, 7)
    assert awarded == 3  # floor(7/2)

    rng = random.Random(RNG_SEED)
    for _ in range(10_000):
        profile = PlayerProfile(profile_id="r", nickname="n")
        for _ in range(rng.randrange(0, 9)):
            progression.award_points(
                profile,
                rng.choice(progression.GAME_IDS),
                rng.randrange(1, 13),
                rng.randrange(0, 11),
            )
        assert progression.recompute_total(profile) == profile.total_points

    before = profile.total_points
    for score in (0, 4, 10):
        qz.record_attempt(profile, "bloch", score)
    assert profile.total_points == before


def test_assessment_bank(content, tmp_path):
    """Assessment grades its keyed answers; the API never leaks them."""
    assessment = content.quizzes["assessment"]
    keyed = [question.correct_index for question in assessment.questions]
    score, _ = qz.grade(assessment, keyed)
    assert score == 10
    score, _ = qz.grade(assessment, qz.default_assessment_answers(assessment))
    assert score == 0

    store = ProfileStore(tmp_path / "data")
    app = create_app(content, store, request_log=False)
    with TestClient(app) as client:
        token = client.post("/api/profiles", json={"nickname": "a"}).json()["token"]
        auth = {"Authorization": f"Bearer {token}"}
        fetched = client.get("/api/quizzes/assessment", headers=auth)
        submitted = client.post(
            "/api/quizzes/assessment/submit",
            json={"answers": ["idk"] * 10},
            headers=auth,
        )
        assert submitted.json()["score"] == 0
        for payload in (fetched.json(), submitted.json()):
            assert "correct_index" not in json.dumps(payload)
            assert "reveal" not in json.dumps(payload)


def test_service_round_trip(content, tmp_path):
    """Scripted end-to-end run over HTTP against a fresh data dir."""
    store = ProfileStore(tmp_path / "data")
    app = create_app(content, store, request_log=False)
    with TestClient(app) as client:
        created = client.post("/api/profiles", json={"nickname": "kea"})
        assert created.status_code == 201
        profile_id = created.json()["profile_id"]
        auth = {"Authorization": f"Bearer {created.json()['token']}"}

        # win the first six bloch levels with solver-optimal play
        for level_id in range(1, 7):
            assert client.post(
                f"/api/games/bloch/levels/{level_id}/session", headers=auth
            ).status_code == 201
            for gate in solver.solve_bloch(content.bloch[level_id]):
                view = client.post(
                    f"/api/games/bloch/levels/{level_id}/session/moves",
                    json={"move": {"gate": gate.name}},
                    headers=auth,
                ).json()
            assert view["status"] == "Won" and view["awarded_points"] == 10

        games = {g["game_id"]: g for g in client.get("/api/games", headers=auth).json()}
        assert games["circuits"]["unlocked"] is True

        # win circuits level 1
        assert client.post(
            "/api/games/circuits/levels/1/session", headers=auth
        ).status_code == 201
        for placement in solver.solve_circuit(content.circuits[1]):
            move = {
                "op": "place",
                "gate": placement.gate.name,
                "column": placement.column,
                "wire": placement.wire,
            }
            view = client.post(
                "/api/games/circuits/levels/1/session/moves",
                json={"move": move},
                headers=auth,
            ).json()
        assert view["status"] == "Won" and view["awarded_points"] == 10

        # submit the bloch in-game quiz with full marks
        quiz = content.quizzes["bloch"]
        submitted = client.post(
            "/api/quizzes/bloch/submit",
            json={"answers": [question.correct_index for question in quiz.questions]},
            headers=auth,
        ).json()
        assert submitted["score"] == 10

        profile = client.get("/api/profile", headers=auth).json()
        assert profile["total_points"] == 70  # 6 bloch wins + 1 circuits win
        assert profile["completed"]["bloch"] == [1, 2, 3, 4, 5, 6]
        assert profile["completed"]["circuits"] == [1]
        assert profile["quiz_records"]["bloch"] == {"attempts": 1, "high_score": 10}

    # persisted JSON reloads bit-identically
    path = store.profiles_dir / f"{profile_id}.json"
    raw = path.read_bytes()
    assert dump_profile(profile_from_doc(json.loads(raw))).encode() == raw


def test_client_contract_fixtures(content, tmp_path):
    """[SECONDARY support] fixture payloads for the web client exist and
    carry server-computed colors, locks, and scores only."""
    store = ProfileStore(tmp_path / "data")
    app = create_app(content, store, request_log=False)
    with TestClient(app) as client:
        token = client.post("/api/profiles", json={"nickname": "fx"}).json()["token"]
        auth = {"Authorization": f"Bearer {token}"}
        games = client.get("/api/games", headers=auth).json()
        assert {g["game_id"] for g in games} == {"bloch", "entanglement", "circuits"}
        view = client.post("/api/games/bloch/levels/1/session", headers=auth).json()
        assert "colored_matrix" not in view  # bloch view has no matrix display
        assert view["current_bloch"]["z"] == pytest.approx(1.0)
