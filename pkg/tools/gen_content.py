#!/usr/bin/env python3
"""Regenerate the shipped level and quiz JSON under levels/ and quizzes/.

Level targets are computed from authored gate solutions, every level is
re-verified with the breadth-first solver (and the bloch minimum lengths
are taken from it), and the files are written deterministically so the
output is stable under re-runs.
"""

from __future__ import annotations

import json
import sys
from collections import deque
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from qubitcat import quantum as q
from qubitcat import solver
from qubitcat.content import (
    parse_bloch_level,
    parse_circuit_level,
    parse_entanglement_level,
    parse_quiz,
)
from qubitcat.entanglement import Action, Mode, partner_action
from qubitcat.quantum import Gate, GateKind, StateVector

LEVELS = REPO / "levels"
QUIZZES = REPO / "quizzes"

KET0 = [[1.0, 0.0], [0.0, 0.0]]
KET1 = [[0.0, 0.0], [1.0, 0.0]]


def state_json(state: StateVector) -> list:
    return [[float(a.real), float(a.imag)] for a in state.amplitudes]


def apply_word(start: StateVector, word: list[Gate]) -> StateVector:
    state = start
    for gate in word:
        state = q.apply_gate(state, gate)
    return state


def write_json(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# Bloch sphere levels
# --------------------------------------------------------------------------

GATE_TOOLTIPS = {
    "X": "Half-turn around the X axis: swaps the poles, so the cat at |0> lands on |1> and back.",
    "Y": "Half-turn around the Y axis: also swaps the poles, but mirrors the equator while doing it.",
    "Z": "Half-turn around the Z axis: spins the cat around the vertical axis and leaves the poles fixed.",
    "H": "Swaps the Z and X axes: carries a pole onto the equator and the equator back to a pole.",
    "S": "Quarter-turn around the Z axis: a 90-degree spin of the equator, introducing imaginary amplitudes.",
}

# (start, solution word, allowed gates, intro, hint)
BLOCH_DESIGNS = [
    (
        KET0,
        ["X"],
        ["X"],
        "The cat shows your qubit's current state on the sphere; the mouse toy marks the "
        "target state. Press a gate button to move the cat.",
        "X exchanges the two poles.",
    ),
    (
        KET0,
        ["H"],
        ["X", "H"],
        "A qubit can rest between |0> and |1>: a superposition. On the sphere those "
        "states live away from the poles.",
        "One gate takes a pole to the equator.",
    ),
    (
        KET1,
        ["H"],
        ["X", "H"],
        "Starting at |1> this time. H works on every state, not just |0>.",
        None,
    ),
    (
        KET0,
        ["H", "Z"],
        ["X", "H", "Z"],
        "Z leaves the poles alone but spins everything else half-way around the vertical "
        "axis. It changes a hidden property called phase.",
        "Get onto the equator first, then spin.",
    ),
    (
        KET0,
        ["H", "S"],
        ["X", "H", "S"],
        "S is a quarter-spin around the vertical axis. Two S presses equal one Z.",
        "H then S walks the equator a quarter of the way around.",
    ),
    (
        KET1,
        ["H", "S"],
        ["X", "H", "S"],
        None,
        "The far side of the equator is a quarter-spin from the |-> point.",
    ),
    (
        KET0,
        ["H", "S", "X"],
        ["X", "H", "S"],
        "Gates compose: the order you press them in matters.",
        None,
    ),
    (
        KET0,
        ["H", "Z", "H"],
        ["H", "Z"],
        "No X this time. Some gates can be built out of others.",
        "Sandwich Z between two H presses.",
    ),
    (
        KET1,
        ["X", "H", "S"],
        ["X", "H", "S"],
        None,
        "Flip to |0> first and the route opens up.",
    ),
    (
        KET0,
        ["H", "S", "S", "H"],
        ["H", "S"],
        "Only H and S now. Every other rostered gate hides inside combinations of these two.",
        "S twice equals Z, and H Z H equals X.",
    ),
    (
        KET1,
        ["H", "S", "S", "H"],
        ["H", "S"],
        None,
        "Walk the equator: H, then quarter-spins until the exit lines up.",
    ),
    # level 12 start/target are filled in by a search below (distance 5)
    (
        None,
        None,
        ["H", "S"],
        "A final challenge: the start is tilted off the usual landmarks.",
        "Five presses, no wasted moves.",
    ),
]


def find_distance_five(allowed: list[str]) -> tuple[StateVector, StateVector]:
    """BFS from a tilted start state; return (start, a state at distance 5)."""
    theta = np.pi / 8
    start = StateVector.of(float(np.cos(theta)), float(np.sin(theta)))
    gates = [Gate(GateKind(name)) for name in allowed]
    mats = {g: q.gate_matrix(g, 1).entries for g in gates}

    def key(vec):
        k = int(np.argmax(np.abs(vec)))
        normalized = vec * (np.conj(vec[k]) / abs(vec[k]))
        return np.round(normalized, 6).tobytes()

    frontier = deque([(start.amplitudes, 0)])
    seen = {key(start.amplitudes): 0}
    at_five = []
    while frontier:
        vec, depth = frontier.popleft()
        if depth == 5:
            at_five.append(vec)
            continue
        for gate in gates:
            nxt = mats[gate] @ vec
            k = key(nxt)
            if k not in seen:
                seen[k] = depth + 1
                frontier.append((nxt, depth + 1))
    if not at_five:
        raise SystemExit("no state at distance 5; adjust the start state")
    return start, StateVector(at_five[0])


def gen_bloch() -> None:
    min_lengths = []
    for index, (start_json, word, allowed, intro, hint) in enumerate(BLOCH_DESIGNS):
        level_id = index + 1
        if start_json is None:
            start, target = find_distance_five(allowed)
        else:
            start = q.state_from_json(start_json)
            target = apply_word(start, [Gate(GateKind(g)) for g in word])
        data = {
            "id": level_id,
            "start_state": state_json(start),
            "target_state": state_json(target),
            "allowed_gates": allowed,
            "min_solution_length": 0,  # provisional; solver fills it in
            "tooltips": {g: GATE_TOOLTIPS[g] for g in allowed},
        }
        if intro:
            data["intro_popup"] = intro
        if hint:
            data["hint"] = hint
        level = parse_bloch_level(data)
        path = solver.solve_bloch(level)
        if path is None:
            raise SystemExit(f"bloch level {level_id} unsolvable within depth 8")
        if word is not None and len(path) != len(word):
            raise SystemExit(
                f"bloch level {level_id}: authored solution has {len(word)} moves "
                f"but the solver found {len(path)}"
            )
        data["min_solution_length"] = len(path)
        min_lengths.append(len(path))
        write_json(LEVELS / "bloch" / f"{level_id:02d}.json", data)
    if min_lengths != sorted(min_lengths):
        raise SystemExit(f"bloch minimum lengths not nondecreasing: {min_lengths}")
    print(f"bloch: 12 levels, minimum lengths {min_lengths}")


# --------------------------------------------------------------------------
# Entanglement levels
# --------------------------------------------------------------------------

OBSTACLE_LABELS = {
    Action.JUMP: "bar hurdle",
    Action.CRAWL: "low tunnel",
    Action.BALANCE: "narrow beam",
    Action.WEAVE: "slalom poles",
    Action.CLIMB: "cargo net",
    Action.PAUSE: "stay table",
}

J, C, B, W, K, P = (
    Action.JUMP,
    Action.CRAWL,
    Action.BALANCE,
    Action.WEAVE,
    Action.CLIMB,
    Action.PAUSE,
)

ENTANGLEMENT_COURSES = [
    [J, K, J, P],
    [C, J, B, J, K],
    [B, W, J, C, K, J],
    [J, P, W, K, C, B],
    [K, B, J, W, P, C, J],
    [W, K, C, J, B, P, J, K],
    [J, C, B, K, W, P],
    [P, J, W, C, K, B, J],
    [C, B, P, J, K, W, C, B],
    [J, W, K, P, C, B, J, W, K],
    [B, C, J, P, W, K, B, J, C, P],
    [J, B, K, W, C, P, J, K, B, W, P, C],
]

ENTANGLEMENT_POPUPS = {
    1: "Two entangled cats, two courses. You steer the left cat; its partner copies "
    "every action exactly. Clear an obstacle together to advance.",
    4: "New: the decoherence meter. Wrong moves let the environment creep in and the "
    "meter rises; synced clears push it back down. A full meter ends the run.",
    7: "The entanglement has changed: the partner cat now does the exact opposite of "
    "your action. Jump pairs with Crawl, Balance with Weave, Climb with Pause.",
}


def gen_entanglement() -> None:
    for index, actions in enumerate(ENTANGLEMENT_COURSES):
        level_id = index + 1
        mode = Mode.CORRELATED if level_id <= 6 else Mode.ANTI_CORRELATED
        course_a = [
            {"required_action": a.value, "label": OBSTACLE_LABELS[a]} for a in actions
        ]
        course_b = [
            {
                "required_action": partner_action(a, mode).value,
                "label": OBSTACLE_LABELS[partner_action(a, mode)],
            }
            for a in actions
        ]
        data = {
            "id": level_id,
            "mode": mode.value,
            "decoherence_enabled": level_id >= 4,
            "wrong_move_limit": 5,
            "course_a": course_a,
            "course_b": course_b,
        }
        if level_id in ENTANGLEMENT_POPUPS:
            data["intro_popup"] = ENTANGLEMENT_POPUPS[level_id]
        from qubitcat.entanglement import validate_level

        violations = validate_level(parse_entanglement_level(data))
        if violations:
            raise SystemExit(f"entanglement level {level_id}: {violations}")
        write_json(LEVELS / "entanglement" / f"{level_id:02d}.json", data)
    print("entanglement: 12 levels")


# --------------------------------------------------------------------------
# Circuit levels
# --------------------------------------------------------------------------

CIRCUIT_TOOLTIPS = {
    "X": "Swaps |0> and |1> on its wire. Lifted to two qubits it permutes half the basis states.",
    "Y": "Like X but with phases: it maps |0> to i|1> and |1> to -i|0> on its wire.",
    "Z": "Negates every amplitude whose bit on this wire is 1; the matrix is diagonal.",
    "H": "Spreads its wire into an even mix of 0 and 1, giving 1/sqrt(2) entries.",
    "S": "Multiplies amplitudes whose bit on this wire is 1 by i; watch for blue cells.",
    "CNOT": "Flips the target wire's bit exactly where the control wire's bit is 1.",
}


def cnot(control, target):
    return (q.cnot(control, target), None)


CIRCUIT_DESIGNS = [
    # (solution placements, allowed gates, max columns, intro, hint)
    (
        [(q.X, 0)],
        ["X"],
        3,
        "Two wires now, so four basis states: |00>, |01>, |10>, |11>. The grid builds a "
        "circuit; its matrix and output are shown live. Match both targets to win.",
        "One X on the top wire.",
    ),
    (
        [(q.X, 1)],
        ["X"],
        3,
        "From this level on, removing a placed gate costs the cat one fish and one "
        "point from the ten available. Plan before you place!",
        None,
    ),
    (
        [(q.H, 0)],
        ["X", "H"],
        4,
        "H on one wire splits the whole system into an even mix along that wire.",
        None,
    ),
    (
        [(q.X, 0), (q.X, 1)],
        ["X", "H"],
        4,
        None,
        "Each wire needs its own flip.",
    ),
    (
        [(q.Z, 0)],
        ["X", "Z", "H"],
        4,
        "The target output state here equals the input - but the empty grid still "
        "loses. Different matrices can agree on one input, so the matrix must match too.",
        "Which gate changes the matrix without moving |00>?",
    ),
    (
        [(q.H, 0), cnot(0, 1)],
        ["X", "H", "CNOT"],
        4,
        "CNOT spans both wires: it flips the bottom wire wherever the top wire reads 1. "
        "After an H it entangles the pair.",
        "Superpose the control, then couple the wires.",
    ),
    (
        [(q.H, 1), cnot(1, 0)],
        ["X", "H", "CNOT"],
        4,
        "CNOT can point the other way: pick which wire controls which.",
        None,
    ),
    (
        [(q.H, 0), cnot(0, 1), (q.X, 1)],
        ["X", "H", "CNOT"],
        5,
        None,
        "Build the entangled pair first, then flip one wire.",
    ),
    (
        [(q.H, 0), (q.S, 0)],
        ["X", "H", "S"],
        4,
        "S introduces imaginary amplitudes: blue and orange cells in the matrix.",
        None,
    ),
    (
        [(q.H, 0), cnot(0, 1), (q.Z, 0)],
        ["X", "Z", "H", "CNOT"],
        5,
        None,
        "A phase flip turns the entangled pair's plus sign into a minus.",
    ),
    (
        [(q.H, 0), (q.Y, 1), cnot(0, 1)],
        ["X", "Y", "H", "CNOT"],
        5,
        "Y is a bit flip and a phase twist in one gate.",
        None,
    ),
    (
        [(q.H, 0), (q.S, 0), cnot(0, 1), (q.S, 1)],
        ["X", "H", "S", "CNOT"],
        6,
        None,
        "Phases picked up on different wires can cancel back to a real matrix.",
    ),
]


def gen_circuits() -> None:
    lengths = []
    for index, (solution, allowed, max_columns, intro, hint) in enumerate(CIRCUIT_DESIGNS):
        level_id = index + 1
        input_state = StateVector.ket("00")
        target_matrix = q.compose_circuit(solution, 2)
        target_state = StateVector(target_matrix.entries @ input_state.amplitudes)
        data = {
            "id": level_id,
            "input_state": state_json(input_state),
            "target_matrix": [
                [[float(z.real), float(z.imag)] for z in row]
                for row in target_matrix.entries
            ],
            "target_state": state_json(target_state),
            "allowed_gates": allowed,
            "max_columns": max_columns,
            "penalty_enabled": level_id >= 2,
            "tooltips": {g: CIRCUIT_TOOLTIPS[g] for g in allowed},
        }
        if intro:
            data["intro_popup"] = intro
        if hint:
            data["hint"] = hint
        level = parse_circuit_level(data)
        placements = solver.solve_circuit(level)
        if placements is None:
            raise SystemExit(f"circuit level {level_id} unsolvable within its columns")
        lengths.append(len(placements))
        write_json(LEVELS / "circuits" / f"{level_id:02d}.json", data)
    print(f"circuits: 12 levels, minimum placements {lengths}")


# --------------------------------------------------------------------------
# Quiz banks
# --------------------------------------------------------------------------


def bank(quiz_id, kind, items):
    return {
        "id": quiz_id,
        "kind": kind,
        "questions": [
            {
                "id": f"{quiz_id}-{i + 1}",
                "prompt": prompt,
                "options": options,
                "correct_index": correct,
            }
            for i, (prompt, options, correct) in enumerate(items)
        ],
    }


ASSESSMENT_QUESTIONS = [
    (
        "Which of the following best describes superposition in quantum computing?",
        [
            "A qubit being either |0> or |1> with certainty",
            "A qubit existing in a combination of |0> and |1> states simultaneously",
            "A qubit switching rapidly between |0> and |1>",
            "A qubit being entangled with another qubit",
        ],
        1,
    ),
    (
        "Which of the following best describes quantum entanglement?",
        [
            "A single qubit being in multiple states at once",
            "A method for reducing noise in quantum systems",
            "A process of measuring qubits without collapse",
            "Two qubits whose states are correlated regardless of distance",
        ],
        3,
    ),
    (
        "Which of the following best describes a quantum gate?",
        [
            "A physical barrier that traps qubits",
            "A cooling device for superconductors",
            "A mathematical operation that changes a qubit's state",
            "A measurement tool for qubits",
        ],
        2,
    ),
    (
        "What is the function of the Hadamard (H) gate?",
        [
            "It entangles two qubits together",
            "It creates a superposition of |0> and |1> from a single qubit",
            "It measures a qubit without collapse",
            "It prevents decoherence during computation",
        ],
        1,
    ),
    (
        "Which of the following statements about the Z (Pauli-Z) gate is correct?",
        [
            "It changes the relative phase of the qubit without flipping its state",
            "It flips the qubit between |0> and |1>",
            "It places the qubit on the equator",
            "It leaves the qubit unchanged",
        ],
        0,
    ),
    (
        "What is a quantum circuit?",
        [
            "A physical wire system that stores qubits",
            "A cooling system for superconducting processors",
            "A measurement tool for qubits",
            "A sequence of quantum gates applied to qubits",
        ],
        3,
    ),
    (
        "Why do quantum computers need to be kept at extremely cold temperatures?",
        [
            "To prevent qubits from overheating and breaking",
            "To reduce interference from surrounding electronic devices",
            "To minimise thermal noise and decoherence",
            "To stop qubits from losing their spin orientation",
        ],
        2,
    ),
    (
        "What is quantum decoherence?",
        [
            "The process of a qubit splitting into two smaller qubits",
            "The loss of quantum behaviour due to environmental interaction",
            "The ability of qubits to exist in multiple states",
            "The collapse of a quantum system into entanglement",
        ],
        1,
    ),
    (
        "What does it mean when a qubit is measured?",
        [
            "The qubit collapses into either |0> or |1>",
            "The qubit becomes entangled with another qubit",
            "The qubit stays in superposition",
            "The qubit cannot be used again",
        ],
        0,
    ),
    (
        "What is the purpose of a controlled gate, like CNOT?",
        [
            "To measure qubits without collapsing them",
            "To keep qubits in superposition indefinitely",
            "To erase errors in a quantum circuit",
            "To apply an operation on one qubit depending on the state of another",
        ],
        3,
    ),
]

BLOCH_QUIZ = [
    (
        "Where does the state |0> sit on the Bloch sphere?",
        ["At the south pole", "At the north pole", "On the equator", "At the centre"],
        1,
    ),
    (
        "Which gate moves the cat from |0> directly to |1>?",
        ["H", "Z", "X", "S"],
        2,
    ),
    (
        "After applying H to |0>, where is the state?",
        [
            "On the equator of the sphere",
            "At the south pole",
            "Unchanged at the north pole",
            "Inside the sphere",
        ],
        0,
    ),
    (
        "What does the Z gate do to the state |0>?",
        [
            "Flips it to |1>",
            "Leaves it in place",
            "Moves it onto the equator",
            "Collapses it",
        ],
        1,
    ),
    (
        "Applying which gate twice in a row returns every state to where it started?",
        ["S", "H", "S then H", "H then S"],
        1,
    ),
    (
        "What does the S gate do on the Bloch sphere?",
        [
            "A quarter-turn around the vertical axis",
            "A half-turn around the X axis",
            "It swaps the poles",
            "Nothing at all",
        ],
        0,
    ),
    (
        "A state exactly on the equator is measured. What are the chances of each outcome?",
        [
            "Always 0",
            "Always 1",
            "50/50 between 0 and 1",
            "It depends on the axis direction only",
        ],
        2,
    ),
    (
        "Which sequence builds a pole flip using only H and Z?",
        ["H, Z", "Z, H", "H, Z, H", "Z, Z"],
        2,
    ),
    (
        "Two states that differ only by a global phase...",
        [
            "sit at the same point on the sphere",
            "sit at opposite poles",
            "always give different measurement results",
            "cannot both be valid states",
        ],
        0,
    ),
    (
        "Which gates can give the cat's state an imaginary amplitude?",
        ["X and Z", "H alone", "S and Y", "None of the gates"],
        2,
    ),
]

ENTANGLEMENT_QUIZ = [
    (
        "Your cats are correlated-entangled. You make your cat jump. What does its partner do?",
        ["Jumps too", "Crawls", "Pauses", "Acts randomly"],
        0,
    ),
    (
        "Your cats are anti-correlated. Your cat climbs. Its partner...",
        ["Climbs", "Pauses", "Weaves", "Jumps"],
        1,
    ),
    (
        "In the anti-correlated pairing, which action is the opposite of Weave?",
        ["Jump", "Crawl", "Balance", "Pause"],
        2,
    ),
    (
        "What raises the decoherence meter?",
        ["Synced clears", "Wrong moves", "Waiting between moves", "Winning a level"],
        1,
    ),
    (
        "What happens when the decoherence meter fills completely?",
        [
            "The run fails and the level restarts",
            "You earn bonus points",
            "The cats swap courses",
            "Nothing changes",
        ],
        0,
    ),
    (
        "How can you push the decoherence meter back down during a run?",
        [
            "Restart the game",
            "Clear obstacles with both cats in sync",
            "Stand still long enough",
            "Make more wrong moves",
        ],
        1,
    ),
    (
        "Why can't you take control of the partner cat?",
        [
            "It is a missing feature",
            "Its behaviour is fixed by the entanglement",
            "The partner cat is asleep",
            "You can, after level 6",
        ],
        1,
    ),
    (
        "Two anti-correlated qubits are measured. One gives 0. The other gives...",
        ["0", "1", "0 or 1 at random", "No result"],
        1,
    ),
    (
        "In real quantum hardware, decoherence comes from...",
        [
            "Applying too many gates",
            "Interaction with the environment",
            "The Bloch sphere representation",
            "Correlations being too strong",
        ],
        1,
    ),
    (
        "Two correlated qubits are measured. One gives 1. The other gives...",
        ["1", "0", "A random result", "Both 0 and 1"],
        0,
    ),
]

CIRCUITS_QUIZ = [
    (
        "How many basis states does a two-qubit system have?",
        ["2", "3", "4", "8"],
        2,
    ),
    (
        "What does the CNOT gate do?",
        [
            "Flips the target qubit when the control qubit is |1>",
            "Flips both qubits unconditionally",
            "Measures the control qubit",
            "Swaps the two qubits",
        ],
        0,
    ),
    (
        "In the circuit grid, what does an empty column contribute?",
        ["A random gate", "Nothing - it acts as the identity", "An error", "A hidden CNOT"],
        1,
    ),
    (
        "Pink cells in the matrix display hold...",
        [
            "positive real numbers",
            "negative real numbers",
            "positive imaginary numbers",
            "values too small to show",
        ],
        0,
    ),
    (
        "A matrix cell drawn as a pink-blue gradient holds...",
        [
            "exactly zero",
            "a number with positive real and positive imaginary parts",
            "two separate numbers",
            "a negative real number",
        ],
        1,
    ),
    (
        "Why must you match the target matrix as well as the target output state?",
        [
            "The matrix is easier to read",
            "Different circuits can produce the same output from one input",
            "The output state never matters",
            "It makes levels longer",
        ],
        1,
    ),
    (
        "From level two onward, what does removing a placed gate cost?",
        ["Nothing", "One fish and one point", "The whole level", "Three fish"],
        1,
    ),
    (
        "After how many lost fish does the cat lose part of its outfit?",
        ["One", "Two", "Three", "Nine"],
        2,
    ),
    (
        "Which circuit turns |00> into an entangled pair?",
        [
            "X on each wire",
            "H on one wire, then a CNOT",
            "Z on both wires",
            "An empty grid",
        ],
        1,
    ),
    (
        "Applying X to wire 1 of the state |00> gives...",
        ["|01>", "|10>", "|11>", "|00>"],
        0,
    ),
]


def gen_quizzes() -> None:
    banks = [
        bank("assessment", "Assessment", ASSESSMENT_QUESTIONS),
        bank("bloch", "InGame", BLOCH_QUIZ),
        bank("entanglement", "InGame", ENTANGLEMENT_QUIZ),
        bank("circuits", "InGame", CIRCUITS_QUIZ),
    ]
    assessment_prompts = {p for p, _, _ in ASSESSMENT_QUESTIONS}
    for data in banks:
        quiz = parse_quiz(data)
        if quiz.kind.value == "InGame":
            overlap = {q_.prompt for q_ in quiz.questions} & assessment_prompts
            if overlap:
                raise SystemExit(f"quiz {quiz.id} overlaps the assessment: {overlap}")
        write_json(QUIZZES / f"{data['id']}.json", data)
    print("quizzes: 4 banks")


if __name__ == "__main__":
    gen_bloch()
    gen_entanglement()
    gen_circuits()
    gen_quizzes()
    print("content written to", LEVELS, "and", QUIZZES)
