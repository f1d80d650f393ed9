"""Dense pure-state vectors with bit-indexed basis bookkeeping.

A state of ``m`` qubits is a normalized complex array of length ``2**m``
over the computational basis.  Qubit ``nu`` addresses binary digit ``nu``
of the basis index ``k``, counting from the right: qubit 0 is the least
significant bit.  All operations are pure functions on immutable inputs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

MAX_QUBITS = 26  # dense complex128 amplitudes reach ~1 GiB at 26 qubits
NORM_TOL = 1e-12
UNIT_TOL = 1e-12

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)

X_AXIS = (1.0, 0.0, 0.0)
Y_AXIS = (0.0, 1.0, 0.0)
Z_AXIS = (0.0, 0.0, 1.0)


class StateFileError(ValueError):
    """Raised when a state file cannot be parsed into amplitude arrays."""


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state of ``num_qubits`` qubits.

    Amplitudes are stored as a read-only complex128 array of length
    ``2**num_qubits``; the squared norm must be 1 within ``NORM_TOL``.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        m = self.num_qubits
        if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_QUBITS:
            raise ValueError(f"num_qubits must be an integer in [1, {MAX_QUBITS}], got {m!r}")
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2**m,):
            raise ValueError(f"expected {2**m} amplitudes for {m} qubits, got shape {amps.shape}")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes contain non-finite entries")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: sum |c_k|^2 = {norm_sq!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits


@dataclass(frozen=True)
class Direction:
    """Real unit 3-vector selecting a local Pauli axis for one qubit.

    ``degenerate`` marks directions returned for a vanishing reduced Bloch
    vector, where every axis minimizes the metric trace; it does not take
    part in equality.
    """

    v1: float
    v2: float
    v3: float
    degenerate: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        norm_sq = self.v1**2 + self.v2**2 + self.v3**2
        if not np.isfinite(norm_sq) or abs(norm_sq - 1.0) > UNIT_TOL:
            raise ValueError(f"direction must be a unit vector: |v|^2 = {norm_sq!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.v1, self.v2, self.v3])


@dataclass(frozen=True)
class LocalUnitary:
    """2x2 unitary acting on a single qubit."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        u = np.ascontiguousarray(self.matrix, dtype=np.complex128)
        if u.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
        defect = np.max(np.abs(u.conj().T @ u - np.eye(2)))
        if defect > UNIT_TOL:
            raise ValueError(f"matrix is not unitary: max |U^H U - I| = {defect!r}")
        if abs(abs(np.linalg.det(u)) - 1.0) > UNIT_TOL:
            raise ValueError("matrix determinant does not have modulus 1")
        u.flags.writeable = False
        object.__setattr__(self, "matrix", u)


def direction_operator(v: Direction) -> np.ndarray:
    """2x2 Hermitian matrix v . sigma = v1*X + v2*Y + v3*Z."""
    return np.array(
        [[v.v3, v.v1 - 1j * v.v2], [v.v1 + 1j * v.v2, -v.v3]], dtype=complex
    )


def make_basis_state(m: int, k: int) -> StateVector:
    """Computational basis state |k> of m qubits."""
    if not 1 <= m <= MAX_QUBITS:
        raise ValueError(f"m must be in [1, {MAX_QUBITS}], got {m}")
    if not 0 <= k < (1 << m):
        raise ValueError(f"basis index must satisfy 0 <= k < 2**{m}, got {k}")
    amps = np.zeros(1 << m, dtype=np.complex128)
    amps[k] = 1.0
    return StateVector(m, amps)


def _apply_one_qubit_matrix(amps: np.ndarray, m: int, qubit: int, mat: np.ndarray) -> np.ndarray:
    """Mix amplitude pairs (k, k + 2**qubit) by an arbitrary 2x2 matrix."""
    view = amps.reshape(1 << (m - 1 - qubit), 2, 1 << qubit)
    return np.einsum("ij,ajb->aib", mat, view).reshape(-1)


def _check_qubit(qubit: int, m: int) -> None:
    if not 0 <= qubit < m:
        raise ValueError(f"qubit index must satisfy 0 <= qubit < {m}, got {qubit}")


def apply_local_unitary(state: StateVector, qubit: int, u: LocalUnitary) -> StateVector:
    """Apply a single-qubit unitary; norm is preserved by construction."""
    _check_qubit(qubit, state.num_qubits)
    out = _apply_one_qubit_matrix(state.amplitudes, state.num_qubits, qubit, u.matrix)
    return StateVector(state.num_qubits, out)


def _bloch_components(amps: np.ndarray, m: int, qubit: int) -> tuple[float, float, float]:
    """Expectations (<X>, <Y>, <Z>) of one qubit from amplitude bilinears."""
    view = amps.reshape(1 << (m - 1 - qubit), 2, 1 << qubit)
    a0 = view[:, 0, :]
    a1 = view[:, 1, :]
    cross = complex(np.einsum("ab,ab->", np.conj(a1), a0))
    p0 = float(np.einsum("ab,ab->", np.conj(a0), a0).real)
    p1 = float(np.einsum("ab,ab->", np.conj(a1), a1).real)
    return 2.0 * cross.real, -2.0 * cross.imag, p0 - p1


def pauli_expectation(state: StateVector, qubit: int, v: Direction) -> float:
    """<s| (v . sigma^qubit) |s>, a real number in [-1, 1]."""
    _check_qubit(qubit, state.num_qubits)
    e1, e2, e3 = _bloch_components(state.amplitudes, state.num_qubits, qubit)
    value = v.v1 * e1 + v.v2 * e2 + v.v3 * e3
    return float(np.clip(value, -1.0, 1.0))


def pauli_pair_correlation(
    state: StateVector, q_mu: int, v_mu: Direction, q_nu: int, v_nu: Direction
) -> float:
    """<s| (v_mu . sigma^mu)(v_nu . sigma^nu) |s> for two distinct qubits.

    The operators act on different qubits, so they commute and the product
    is Hermitian; the expectation is real and lies in [-1, 1].
    """
    m = state.num_qubits
    _check_qubit(q_mu, m)
    _check_qubit(q_nu, m)
    if q_mu == q_nu:
        raise ValueError(
            "pair correlation requires distinct qubits; "
            "for equal qubits use pauli_expectation and (v.sigma)^2 = 1"
        )
    left = _apply_one_qubit_matrix(state.amplitudes, m, q_mu, direction_operator(v_mu))
    right = _apply_one_qubit_matrix(state.amplitudes, m, q_nu, direction_operator(v_nu))
    value = np.vdot(left, right).real
    return float(np.clip(value, -1.0, 1.0))


def _haar_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed 2x2 unitary via QR of a complex Ginibre matrix."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_local_unitary(seed: int) -> LocalUnitary:
    """Haar-random single-qubit unitary, deterministic for a fixed seed."""
    return LocalUnitary(_haar_unitary(np.random.default_rng(seed)))


def read_state_file(path: str | Path) -> StateVector:
    """Read a state from JSON {"m": M, "re": [...], "im": [...]}.

    Structural problems raise StateFileError; a state that parses but is
    not normalized raises ValueError from the StateVector constructor.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise StateFileError(f"cannot read state file {path}: {exc}") from exc
    if not isinstance(payload, dict) or not {"m", "re", "im"} <= payload.keys():
        raise StateFileError(f'state file {path} must be an object with keys "m", "re", "im"')
    m = payload["m"]
    if not isinstance(m, int) or not 1 <= m <= MAX_QUBITS:
        raise StateFileError(f'state file {path}: "m" must be an integer in [1, {MAX_QUBITS}]')
    re, im = payload["re"], payload["im"]
    if not isinstance(re, list) or not isinstance(im, list) or len(re) != 2**m or len(im) != 2**m:
        raise StateFileError(f'state file {path}: "re" and "im" must be arrays of length 2**m')
    try:
        amps = np.asarray(re, dtype=float) + 1j * np.asarray(im, dtype=float)
    except (TypeError, ValueError) as exc:
        raise StateFileError(f"state file {path}: amplitude entries are not numbers") from exc
    return StateVector(m, amps)


def write_state_file(path: str | Path, state: StateVector) -> None:
    """Write a state as JSON {"m": M, "re": [...], "im": [...]}."""
    payload = {
        "m": state.num_qubits,
        "re": state.amplitudes.real.tolist(),
        "im": state.amplitudes.imag.tolist(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
