"""Complex linear algebra for 1-2 qubit states and gates.

Everything here is exact-as-possible numerics on tiny (2x2 / 4x4) complex
matrices: gate definitions, tensor-product lifting, circuit composition,
Bloch-sphere mapping, measurement probabilities, the global-phase-free
state comparator used as the win condition, and the color classification
of matrix entries shown to the player.

Conventions:
  * Basis order: qubit 0 is the *left* symbol, so two-qubit amplitudes are
    ordered |00>, |01>, |10>, |11> and index = 2*q0 + q1.
  * Lifting a single-qubit gate G to two wires: wire 0 -> G (x) I,
    wire 1 -> I (x) G (numpy.kron order matches the basis convention).
  * Circuits apply left to right: the first gate in a sequence is the
    rightmost matrix factor acting on the state.

All types are immutable values; functions never mutate their inputs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import numpy as np

NORM_TOL = 1e-9      # internal normalization / unitarity tolerance
MATCH_TOL = 1e-6     # player-facing win-check tolerance


class DimensionError(ValueError):
    """State/matrix dimensions do not match the operation."""


class InvalidGateError(ValueError):
    """Gate is malformed or not valid for the requested system size."""


class GateKind(str, enum.Enum):
    X = "X"
    Y = "Y"
    Z = "Z"
    H = "H"
    S = "S"
    CNOT = "CNOT"


SINGLE_QUBIT_KINDS = frozenset(
    {GateKind.X, GateKind.Y, GateKind.Z, GateKind.H, GateKind.S}
)

_SQRT2_INV = 1.0 / math.sqrt(2.0)

_SINGLE_QUBIT_MATRICES = {
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
}


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Gate:
    """A named gate; CNOT additionally carries its control/target wires."""

    kind: GateKind
    control: Optional[int] = None
    target: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == GateKind.CNOT:
            if self.control is None or self.target is None:
                raise InvalidGateError("CNOT requires control and target wires")
            if self.control == self.target:
                raise InvalidGateError("CNOT control and target must differ")
            if not {self.control, self.target} <= {0, 1}:
                raise InvalidGateError("CNOT wires must be 0 or 1")
        elif self.control is not None or self.target is not None:
            raise InvalidGateError(f"{self.kind.value} takes no control/target")

    @property
    def name(self) -> str:
        return self.kind.value

    def __str__(self) -> str:
        if self.kind == GateKind.CNOT:
            return f"CNOT({self.control}->{self.target})"
        return self.kind.value


X = Gate(GateKind.X)
Y = Gate(GateKind.Y)
Z = Gate(GateKind.Z)
H = Gate(GateKind.H)
S = Gate(GateKind.S)


def cnot(control: int = 0, target: int = 1) -> Gate:
    return Gate(GateKind.CNOT, control=control, target=target)


def _as_complex_vector(amplitudes: Iterable[complex]) -> np.ndarray:
    vec = np.asarray(list(amplitudes), dtype=complex)
    if vec.ndim != 1 or vec.shape[0] not in (2, 4):
        raise DimensionError("state must have 2 or 4 amplitudes")
    if not np.all(np.isfinite(vec)):
        raise ValueError("state amplitudes must be finite")
    return vec


@dataclass(frozen=True)
class StateVector:
    """Normalized amplitude vector for 1 or 2 qubits."""

    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vec = _as_complex_vector(self.amplitudes)
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state not normalized: |state| = {norm!r}")
        object.__setattr__(self, "amplitudes", _freeze(vec))

    @classmethod
    def of(cls, *amplitudes: complex) -> "StateVector":
        return cls(np.array(amplitudes, dtype=complex))

    @classmethod
    def ket(cls, bits: str) -> "StateVector":
        """Basis state from a bit string, e.g. ket("0") or ket("10")."""
        if not bits or len(bits) > 2 or any(b not in "01" for b in bits):
            raise ValueError(f"bad basis label {bits!r}")
        vec = np.zeros(2 ** len(bits), dtype=complex)
        vec[int(bits, 2)] = 1.0
        return cls(vec)

    @property
    def num_qubits(self) -> int:
        return 1 if self.amplitudes.shape[0] == 2 else 2

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def __repr__(self) -> str:
        amps = ", ".join(f"{a:.6g}" for a in self.amplitudes)
        return f"StateVector([{amps}])"


@dataclass(frozen=True)
class UnitaryMatrix:
    """2x2 or 4x4 unitary, row-major."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        mat = np.asarray(self.entries, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] not in (2, 4):
            raise DimensionError("matrix must be 2x2 or 4x4")
        if not np.all(np.isfinite(mat)):
            raise ValueError("matrix entries must be finite")
        deviation = np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0])))
        if deviation > NORM_TOL:
            raise ValueError(f"matrix not unitary: max deviation {deviation!r}")
        object.__setattr__(self, "entries", _freeze(mat))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: "UnitaryMatrix") -> "UnitaryMatrix":
        if self.dim != other.dim:
            raise DimensionError("matrix dimensions differ")
        return UnitaryMatrix(self.entries @ other.entries)

    def __repr__(self) -> str:
        return f"UnitaryMatrix(dim={self.dim})"


@dataclass(frozen=True)
class BlochPoint:
    x: float
    y: float
    z: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


class Color(str, enum.Enum):
    PINK = "pink"        # positive real
    YELLOW = "yellow"    # negative real
    BLUE = "blue"        # positive imaginary
    ORANGE = "orange"    # negative imaginary
    ZERO = "zero"


@dataclass(frozen=True)
class ColorClass:
    """Primary color of a matrix entry, plus a secondary tag for gradients."""

    primary: Color
    secondary: Optional[Color] = None

    def __post_init__(self) -> None:
        if self.primary == Color.ZERO and self.secondary is not None:
            raise ValueError("ZERO entries carry no secondary color")
        if self.secondary is not None and self.secondary == self.primary:
            raise ValueError("secondary color must differ from primary")


# -- gate matrices ----------------------------------------------------------


def gate_matrix(gate: Gate, num_qubits: int) -> UnitaryMatrix:
    """Canonical matrix of a gate: 2x2 for single-qubit kinds, 4x4 for CNOT."""
    if num_qubits not in (1, 2):
        raise DimensionError("num_qubits must be 1 or 2")
    if gate.kind == GateKind.CNOT:
        if num_qubits != 2:
            raise InvalidGateError("CNOT requires a two-qubit system")
        # permutation matrix: flip the target bit where the control bit is 1
        mat = np.zeros((4, 4), dtype=complex)
        for col in range(4):
            bits = [(col >> 1) & 1, col & 1]
            if bits[gate.control] == 1:
                bits[gate.target] ^= 1
            mat[2 * bits[0] + bits[1], col] = 1.0
        return UnitaryMatrix(mat)
    return UnitaryMatrix(_SINGLE_QUBIT_MATRICES[gate.kind].copy())


def lift_single_qubit_gate(gate: Gate, wire: int) -> UnitaryMatrix:
    """Tensor a single-qubit gate with identity onto the other wire."""
    if gate.kind == GateKind.CNOT:
        raise InvalidGateError("CNOT is already a two-qubit gate")
    if wire not in (0, 1):
        raise InvalidGateError(f"wire must be 0 or 1, got {wire}")
    g = _SINGLE_QUBIT_MATRICES[gate.kind]
    eye = np.eye(2, dtype=complex)
    lifted = np.kron(g, eye) if wire == 0 else np.kron(eye, g)
    return UnitaryMatrix(lifted)


def _lift(gate: Gate, wire: Optional[int], num_qubits: int) -> UnitaryMatrix:
    if num_qubits == 1:
        if gate.kind == GateKind.CNOT:
            raise InvalidGateError("CNOT requires a two-qubit system")
        return gate_matrix(gate, 1)
    if gate.kind == GateKind.CNOT:
        return gate_matrix(gate, 2)
    if wire is None:
        raise InvalidGateError(f"{gate} on a two-qubit system needs a wire index")
    return lift_single_qubit_gate(gate, wire)


def apply_gate(state: StateVector, gate: Gate, wire: Optional[int] = None) -> StateVector:
    """Apply one gate to a state, returning a fresh normalized state."""
    matrix = _lift(gate, wire, state.num_qubits)
    return StateVector(matrix.entries @ state.amplitudes)


GateOnWire = Union[Gate, tuple[Gate, Optional[int]]]


def _normalize_circuit(
    gates: Sequence[GateOnWire],
) -> list[tuple[Gate, Optional[int]]]:
    out = []
    for item in gates:
        if isinstance(item, Gate):
            out.append((item, None))
        else:
            gate, wire = item
            out.append((gate, wire))
    return out


def compose_circuit(gates: Sequence[GateOnWire], num_qubits: int) -> UnitaryMatrix:
    """Product of lifted gate matrices in application order.

    The first gate in ``gates`` is the rightmost factor, so the returned
    matrix applied to a state equals folding apply_gate over the sequence.
    An empty sequence composes to the identity.
    """
    if num_qubits not in (1, 2):
        raise DimensionError("num_qubits must be 1 or 2")
    total = np.eye(2**num_qubits, dtype=complex)
    for index, (gate, wire) in enumerate(_normalize_circuit(gates)):
        try:
            lifted = _lift(gate, wire, num_qubits)
        except (InvalidGateError, DimensionError) as exc:
            raise InvalidGateError(f"gate #{index} ({gate}): {exc}") from exc
        total = lifted.entries @ total
    return UnitaryMatrix(total)


# -- observables ------------------------------------------------------------


def bloch_coordinates(state: StateVector) -> BlochPoint:
    """Map a single-qubit state a|0> + b|1> to its point on the unit sphere."""
    if state.num_qubits != 1:
        raise DimensionError("Bloch coordinates are defined for one qubit")
    a, b = state.amplitudes
    cross = np.conj(a) * b
    return BlochPoint(
        x=float(2.0 * cross.real),
        y=float(2.0 * cross.imag),
        z=float(abs(a) ** 2 - abs(b) ** 2),
    )


def measurement_probabilities(state: StateVector) -> list[float]:
    """Born-rule probability of each basis outcome (no sampling)."""
    return [float(abs(a) ** 2) for a in state.amplitudes]


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float = MATCH_TOL) -> bool:
    """True iff a equals c*b for some unit-modulus scalar c, within tol.

    The candidate phase is read off at b's largest-magnitude amplitude; if
    the states really do differ only by a global phase this recovers it
    exactly, otherwise the residual check fails.
    """
    if a.dim != b.dim:
        raise DimensionError("states have different dimensions")
    k = int(np.argmax(np.abs(b.amplitudes)))
    overlap = np.conj(b.amplitudes[k]) * a.amplitudes[k]
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return bool(np.max(np.abs(a.amplitudes - phase * b.amplitudes)) <= tol)


def classify_entry(z: complex, tol: float = NORM_TOL) -> ColorClass:
    """Color-class a complex entry by the signs of its real/imaginary parts.

    Pure real/imaginary entries get a single color; mixed entries pair the
    real-part color with the imaginary-part color (rendered as a gradient).
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("entry must be finite")
    if abs(z) <= tol:
        return ColorClass(Color.ZERO)
    real_color = None if abs(z.real) <= tol else (
        Color.PINK if z.real > 0 else Color.YELLOW
    )
    imag_color = None if abs(z.imag) <= tol else (
        Color.BLUE if z.imag > 0 else Color.ORANGE
    )
    if real_color is not None and imag_color is not None:
        return ColorClass(real_color, imag_color)
    return ColorClass(real_color or imag_color)


def classify_matrix(matrix: UnitaryMatrix, tol: float = NORM_TOL) -> list[list[ColorClass]]:
    return [[classify_entry(z, tol) for z in row] for row in matrix.entries]


# -- JSON encoding (service-wide wire format) --------------------------------


def complex_to_json(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def complex_from_json(pair: Sequence[float]) -> complex:
    if len(pair) != 2:
        raise ValueError(f"complex value must be [re, im], got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def state_to_json(state: StateVector) -> list[list[float]]:
    return [complex_to_json(a) for a in state.amplitudes]


def state_from_json(data: Sequence[Sequence[float]]) -> StateVector:
    return StateVector(np.array([complex_from_json(pair) for pair in data]))


def matrix_to_json(matrix: UnitaryMatrix) -> list[list[list[float]]]:
    return [[complex_to_json(z) for z in row] for row in matrix.entries]


def matrix_from_json(data: Sequence[Sequence[Sequence[float]]]) -> UnitaryMatrix:
    return UnitaryMatrix(
        np.array([[complex_from_json(pair) for pair in row] for row in data])
    )


def color_class_to_json(c: ColorClass) -> dict:
    out: dict = {"primary": c.primary.value}
    if c.secondary is not None:
        out["secondary"] = c.secondary.value
    return out
