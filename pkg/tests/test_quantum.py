"""Core linear-algebra tests.

The oracles here are deliberately independent of qubitcat.quantum: raw
numpy kron/matmul for lifting and composition, Pauli expectation-value
sandwiches for the Bloch map, and basis-state enumeration for CNOT.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qubitcat import quantum as q
from qubitcat.quantum import (
    Color,
    ColorClass,
    DimensionError,
    Gate,
    GateKind,
    InvalidGateError,
    StateVector,
    UnitaryMatrix,
)

# test-local gate definitions (the oracle side)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)
_I = np.eye(2, dtype=complex)
_PAULIS = {"x": _X, "y": _Y, "z": _Z}
_BY_KIND = {"X": _X, "Y": _Y, "Z": _Z, "H": _H, "S": _S}

SINGLE_GATES = [q.X, q.Y, q.Z, q.H, q.S]


def random_state(rng, dim):
    vec = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateVector(vec / np.linalg.norm(vec))


def random_circuit(rng, num_qubits, length):
    gates = []
    for _ in range(length):
        if num_qubits == 2 and rng.random() < 0.25:
            control = int(rng.integers(0, 2))
            gates.append((q.cnot(control, 1 - control), None))
        else:
            gate = SINGLE_GATES[rng.integers(0, len(SINGLE_GATES))]
            wire = int(rng.integers(0, num_qubits)) if num_qubits == 2 else None
            gates.append((gate, wire))
    return gates


def oracle_matrix(gates, num_qubits):
    """Independent composition: numpy kron + matmul, first gate rightmost."""
    total = np.eye(2**num_qubits, dtype=complex)
    for gate, wire in gates:
        if gate.kind == GateKind.CNOT:
            lifted = np.zeros((4, 4), dtype=complex)
            for col in range(4):
                bits = [(col >> 1) & 1, col & 1]
                if bits[gate.control]:
                    bits[gate.target] ^= 1
                lifted[2 * bits[0] + bits[1], col] = 1.0
        else:
            g = _BY_KIND[gate.kind.value]
            if num_qubits == 1:
                lifted = g
            else:
                lifted = np.kron(g, _I) if wire == 0 else np.kron(_I, g)
        total = lifted @ total
    return total


def pauli_expectation(state, axis):
    psi = state.amplitudes
    return float(np.real(np.conj(psi) @ _PAULIS[axis] @ psi))


# -- gate matrices -----------------------------------------------------------


def test_x_flips_basis_states():
    xm = q.gate_matrix(q.X, 1).entries
    np.testing.assert_allclose(xm, [[0, 1], [1, 0]])
    np.testing.assert_allclose(xm @ [1, 0], [0, 1])
    np.testing.assert_allclose(xm @ [0, 1], [1, 0])


def test_h_creates_equal_superposition():
    plus = q.apply_gate(StateVector.ket("0"), q.H)
    np.testing.assert_allclose(plus.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-12)


def test_cnot_truth_table():
    # enumerate the controlled flip over all four basis states
    for control, target in [(0, 1), (1, 0)]:
        mat = q.gate_matrix(q.cnot(control, target), 2).entries
        for basis in range(4):
            bits = [(basis >> 1) & 1, basis & 1]
            if bits[control]:
                bits[target] ^= 1
            expected = np.zeros(4)
            expected[2 * bits[0] + bits[1]] = 1.0
            inp = np.zeros(4)
            inp[basis] = 1.0
            np.testing.assert_allclose(mat @ inp, expected)


def test_cnot_01_swaps_10_and_11():
    mat = q.gate_matrix(q.cnot(0, 1), 2).entries
    expected = np.eye(4)
    expected[[2, 3]] = expected[[3, 2]]
    np.testing.assert_allclose(mat, expected)


def test_cnot_on_one_qubit_rejected():
    with pytest.raises(InvalidGateError):
        q.gate_matrix(q.cnot(0, 1), 1)


def test_cnot_gate_requires_distinct_wires():
    with pytest.raises(InvalidGateError):
        Gate(GateKind.CNOT, control=0, target=0)


@pytest.mark.parametrize("gate", SINGLE_GATES + [q.cnot(0, 1), q.cnot(1, 0)])
def test_gate_matrices_unitary(gate):
    mat = q.gate_matrix(gate, 2 if gate.kind == GateKind.CNOT else 1).entries
    dev = np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0])))
    assert dev < 1e-12


@pytest.mark.parametrize("gate", [q.X, q.Z, q.H])
def test_involutions(gate):
    mat = q.gate_matrix(gate, 1).entries
    np.testing.assert_allclose(mat @ mat, np.eye(2), atol=1e-12)


def test_cnot_involution():
    mat = q.gate_matrix(q.cnot(0, 1), 2).entries
    np.testing.assert_allclose(mat @ mat, np.eye(4), atol=1e-12)


def test_s_fourth_power_is_identity():
    mat = q.gate_matrix(q.S, 1).entries
    np.testing.assert_allclose(np.linalg.matrix_power(mat, 4), np.eye(2), atol=1e-12)


# -- lifting -----------------------------------------------------------------


def test_lift_x_wire0_maps_00_to_10():
    lifted = q.lift_single_qubit_gate(q.X, 0).entries
    np.testing.assert_allclose(lifted, np.kron(_X, _I))
    np.testing.assert_allclose(lifted @ [1, 0, 0, 0], [0, 0, 1, 0])


def test_lift_h_wire1_on_00():
    lifted = q.lift_single_qubit_gate(q.H, 1).entries
    np.testing.assert_allclose(lifted, np.kron(_I, _H))
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(lifted @ [1, 0, 0, 0], [r, r, 0, 0])


def test_lift_z_wire0_fixes_00():
    state = q.apply_gate(StateVector.ket("00"), q.Z, wire=0)
    np.testing.assert_allclose(state.amplitudes, [1, 0, 0, 0])


def test_lift_rejects_bad_wire_and_cnot():
    with pytest.raises(InvalidGateError):
        q.lift_single_qubit_gate(q.X, 2)
    with pytest.raises(InvalidGateError):
        q.lift_single_qubit_gate(q.cnot(0, 1), 0)


# -- apply_gate / compose_circuit --------------------------------------------


def test_apply_x_flips_ket0():
    out = q.apply_gate(StateVector.ket("0"), q.X)
    np.testing.assert_allclose(out.amplitudes, [0, 1])


def test_h_self_inverse_on_state():
    out = q.apply_gate(q.apply_gate(StateVector.ket("0"), q.H), q.H)
    np.testing.assert_allclose(out.amplitudes, [1, 0], atol=1e-12)


def test_apply_gate_does_not_mutate_input():
    state = StateVector.ket("0")
    before = state.amplitudes.copy()
    q.apply_gate(state, q.X)
    np.testing.assert_array_equal(state.amplitudes, before)


def test_bell_state_construction():
    state = q.apply_gate(StateVector.ket("00"), q.H, wire=0)
    state = q.apply_gate(state, q.cnot(0, 1))
    # oracle: direct 4x4 multiplication
    expected = oracle_matrix([(q.H, 0), (q.cnot(0, 1), None)], 2) @ [1, 0, 0, 0]
    np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(state.amplitudes, [r, 0, 0, r], atol=1e-12)


def test_apply_gate_dimension_mismatch():
    with pytest.raises(InvalidGateError):
        q.apply_gate(StateVector.ket("0"), q.cnot(0, 1))
    with pytest.raises(InvalidGateError):
        q.apply_gate(StateVector.ket("00"), q.H)  # missing wire


def test_compose_empty_is_identity():
    np.testing.assert_allclose(q.compose_circuit([], 1).entries, np.eye(2))
    np.testing.assert_allclose(q.compose_circuit([], 2).entries, np.eye(4))


def test_compose_xx_is_identity():
    mat = q.compose_circuit([q.X, q.X], 1).entries
    np.testing.assert_allclose(mat, np.eye(2), atol=1e-12)


def test_compose_bell_circuit():
    mat = q.compose_circuit([(q.H, 0), (q.cnot(0, 1), None)], 2)
    out = mat.entries @ [1, 0, 0, 0]
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(out, [r, 0, 0, r], atol=1e-12)


def test_compose_reports_bad_gate_index():
    with pytest.raises(InvalidGateError, match="#1"):
        q.compose_circuit([(q.X, None), (q.cnot(0, 1), None)], 1)


def test_compose_matches_fold_apply_oracle():
    rng = np.random.default_rng(7)
    for _ in range(200):
        num_qubits = int(rng.integers(1, 3))
        gates = random_circuit(rng, num_qubits, int(rng.integers(0, 9)))
        composed = q.compose_circuit(gates, num_qubits)
        np.testing.assert_allclose(
            composed.entries, oracle_matrix(gates, num_qubits), atol=1e-9
        )
        # and against folding apply_gate over a random state
        state = random_state(rng, 2**num_qubits)
        folded = state
        for gate, wire in gates:
            folded = q.apply_gate(folded, gate, wire)
        np.testing.assert_allclose(
            composed.entries @ state.amplitudes, folded.amplitudes, atol=1e-9
        )


def test_norm_preserved_over_long_sequences():
    rng = np.random.default_rng(11)
    for _ in range(20):
        num_qubits = int(rng.integers(1, 3))
        state = random_state(rng, 2**num_qubits)
        for gate, wire in random_circuit(rng, num_qubits, 50):
            state = q.apply_gate(state, gate, wire)
        assert abs(np.linalg.norm(state.amplitudes) - 1.0) < 1e-9


# -- Bloch mapping ------------------------------------------------------------


def test_bloch_poles():
    assert q.bloch_coordinates(StateVector.ket("0")).as_tuple() == (0.0, 0.0, 1.0)
    assert q.bloch_coordinates(StateVector.ket("1")).as_tuple() == (0.0, 0.0, -1.0)


def test_bloch_plus_state_via_pauli_oracle():
    plus = q.apply_gate(StateVector.ket("0"), q.H)
    point = q.bloch_coordinates(plus)
    for axis, coord in zip("xyz", point.as_tuple()):
        assert abs(coord - pauli_expectation(plus, axis)) < 1e-12
    np.testing.assert_allclose(point.as_tuple(), (1, 0, 0), atol=1e-9)


def test_bloch_matches_pauli_expectations_randomly():
    rng = np.random.default_rng(13)
    for _ in range(300):
        state = random_state(rng, 2)
        point = q.bloch_coordinates(state)
        for axis, coord in zip("xyz", point.as_tuple()):
            assert abs(coord - pauli_expectation(state, axis)) < 1e-9
        assert abs(sum(c * c for c in point.as_tuple()) - 1.0) < 1e-9


def test_bloch_rejects_two_qubit_state():
    with pytest.raises(DimensionError):
        q.bloch_coordinates(StateVector.ket("00"))


# -- measurement probabilities ------------------------------------------------


def test_probabilities_basis_and_plus():
    assert q.measurement_probabilities(StateVector.ket("1")) == [0.0, 1.0]
    probs = q.measurement_probabilities(q.apply_gate(StateVector.ket("0"), q.H))
    np.testing.assert_allclose(probs, [0.5, 0.5], atol=1e-12)


def test_bell_probabilities():
    bell = q.apply_gate(StateVector.ket("00"), q.H, wire=0)
    bell = q.apply_gate(bell, q.cnot(0, 1))
    np.testing.assert_allclose(
        q.measurement_probabilities(bell), [0.5, 0, 0, 0.5], atol=1e-12
    )


def test_probabilities_sum_to_one():
    rng = np.random.default_rng(17)
    for dim in (2, 4):
        for _ in range(50):
            probs = q.measurement_probabilities(random_state(rng, dim))
            assert abs(sum(probs) - 1.0) < 1e-9


# -- global-phase comparator ---------------------------------------------------


def test_phase_comparator_examples():
    ket0 = StateVector.ket("0")
    minus_ket0 = StateVector.of(-1, 0)
    assert q.equal_up_to_global_phase(ket0, minus_ket0, 1e-6)
    assert not q.equal_up_to_global_phase(ket0, StateVector.ket("1"), 1e-6)
    plus = q.apply_gate(ket0, q.H)
    rotated = StateVector(np.exp(1j * math.pi / 4) * plus.amplitudes)
    assert q.equal_up_to_global_phase(plus, rotated, 1e-6)


def test_phase_comparator_dimension_mismatch():
    with pytest.raises(DimensionError):
        q.equal_up_to_global_phase(StateVector.ket("0"), StateVector.ket("00"))


@given(seed=st.integers(0, 10_000), angle=st.floats(0, 2 * math.pi))
@settings(max_examples=100, deadline=None)
def test_phase_comparator_invariances(seed, angle):
    rng = np.random.default_rng(seed)
    dim = 2 if seed % 2 else 4
    a = random_state(rng, dim)
    b = random_state(rng, dim)
    rotated = StateVector(np.exp(1j * angle) * a.amplitudes)
    # reflexive + invariant under unit-modulus scaling of either side
    assert q.equal_up_to_global_phase(a, a)
    assert q.equal_up_to_global_phase(a, rotated)
    assert q.equal_up_to_global_phase(rotated, a)
    # symmetric
    assert q.equal_up_to_global_phase(a, b) == q.equal_up_to_global_phase(b, a)


# -- color classification ------------------------------------------------------


@pytest.mark.parametrize(
    "value,primary,secondary",
    [
        (1.0, Color.PINK, None),
        (-0.25, Color.YELLOW, None),
        (0.5j, Color.BLUE, None),
        (-1j, Color.ORANGE, None),
        (0.0, Color.ZERO, None),
        ((1 + 1j) / math.sqrt(2), Color.PINK, Color.BLUE),
        (-0.5 - 0.5j, Color.YELLOW, Color.ORANGE),
        (0.3 - 0.4j, Color.PINK, Color.ORANGE),
    ],
)
def test_classify_entry(value, primary, secondary):
    got = q.classify_entry(value, 1e-9)
    assert got == ColorClass(primary, secondary)


@given(
    re=st.floats(-2, 2, allow_nan=False),
    im=st.floats(-2, 2, allow_nan=False),
)
@settings(max_examples=200, deadline=None)
def test_classify_entry_total(re, im):
    got = q.classify_entry(complex(re, im), 1e-9)
    assert isinstance(got, ColorClass)
    if got.primary == Color.ZERO:
        assert got.secondary is None
    if got.secondary is not None:
        assert got.secondary != got.primary


def test_color_class_invariants_enforced():
    with pytest.raises(ValueError):
        ColorClass(Color.ZERO, Color.PINK)
    with pytest.raises(ValueError):
        ColorClass(Color.PINK, Color.PINK)


# -- value types ----------------------------------------------------------------


def test_state_requires_normalization():
    with pytest.raises(ValueError):
        StateVector.of(1, 1)


def test_state_rejects_nan():
    with pytest.raises(ValueError):
        StateVector.of(float("nan"), 0)


def test_unitary_matrix_rejects_non_unitary():
    with pytest.raises(ValueError):
        UnitaryMatrix(np.array([[1, 0], [0, 2]], dtype=complex))


def test_state_amplitudes_read_only():
    state = StateVector.ket("0")
    with pytest.raises(ValueError):
        state.amplitudes[0] = 5


def test_json_round_trips():
    rng = np.random.default_rng(23)
    state = random_state(rng, 4)
    again = q.state_from_json(q.state_to_json(state))
    np.testing.assert_allclose(again.amplitudes, state.amplitudes)
    mat = q.compose_circuit([(q.H, 0), (q.S, 1), (q.cnot(0, 1), None)], 2)
    again_m = q.matrix_from_json(q.matrix_to_json(mat))
    np.testing.assert_allclose(again_m.entries, mat.entries)
