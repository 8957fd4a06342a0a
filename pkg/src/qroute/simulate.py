"""Dense statevector simulation and small-scale unitary extraction.

Bit convention: wire 0 is the most significant bit of a basis index, so the
basis label reads left to right as wires 0..n-1. Probabilities are read from
amplitudes directly; nothing here samples shots or models noise.
"""
from __future__ import annotations

import math

import numpy as np

from .circuits import Circuit, Gate, GateKind

DEFAULT_MAX_QUBITS = 20
UNITARY_MAX_QUBITS = 10

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

_FIXED_1Q = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _INV_SQRT2,
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SX: np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex) / 2,
    GateKind.SXDG: np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]], dtype=complex) / 2,
}


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]],
                    dtype=complex)


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def gate_matrix_1q(g: Gate) -> np.ndarray:
    if g.kind in _FIXED_1Q:
        return _FIXED_1Q[g.kind]
    if g.kind is GateKind.RZ:
        return rz_matrix(g.angle)
    if g.kind is GateKind.RY:
        return ry_matrix(g.angle)
    raise ValueError(f"{g.kind.value} is not a single-qubit gate")


def _apply_1q(psi: np.ndarray, mat: np.ndarray, wire: int) -> np.ndarray:
    out = np.tensordot(mat, psi, axes=(1, wire))
    return np.moveaxis(out, 0, wire)


def _slice(ndim: int, assignments: dict[int, int]) -> tuple:
    ix: list = [slice(None)] * ndim
    for axis, bit in assignments.items():
        ix[axis] = bit
    return tuple(ix)


def _apply_gate(psi: np.ndarray, g: Gate, n: int) -> np.ndarray:
    if g.kind.n_wires == 1:
        return _apply_1q(psi, gate_matrix_1q(g), g.wires[0])
    a, b = g.wires
    if g.kind is GateKind.CX:
        i10, i11 = _slice(psi.ndim, {a: 1, b: 0}), _slice(psi.ndim, {a: 1, b: 1})
        psi[i10], psi[i11] = psi[i11].copy(), psi[i10].copy()
    elif g.kind is GateKind.SWAP:
        i01, i10 = _slice(psi.ndim, {a: 0, b: 1}), _slice(psi.ndim, {a: 1, b: 0})
        psi[i01], psi[i10] = psi[i10].copy(), psi[i01].copy()
    elif g.kind is GateKind.CRZ:
        psi[_slice(psi.ndim, {a: 1, b: 0})] *= np.exp(-0.5j * g.angle)
        psi[_slice(psi.ndim, {a: 1, b: 1})] *= np.exp(0.5j * g.angle)
    elif g.kind is GateKind.CP:
        psi[_slice(psi.ndim, {a: 1, b: 1})] *= np.exp(1j * g.angle)
    else:
        raise ValueError(f"no matrix for {g.kind.value}")
    return psi


def run(c: Circuit, initial: int = 0,
        max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    """Apply all gates in order to the basis state |initial>."""
    n = c.width
    if n > max_qubits:
        raise ValueError(f"width {n} exceeds the {max_qubits}-qubit cap")
    if not 0 <= initial < 2 ** n:
        raise ValueError(f"initial basis index {initial} out of range")
    psi = np.zeros((2,) * n, dtype=complex)
    psi[np.unravel_index(initial, (2,) * n)] = 1.0
    for g in c.gates:
        psi = _apply_gate(psi, g, n)
    flat = psi.reshape(-1)
    norm = np.linalg.norm(flat)
    assert abs(norm - 1.0) < 1e-10, f"statevector norm drifted to {norm}"
    return flat


def unitary_of(c: Circuit, max_qubits: int = UNITARY_MAX_QUBITS) -> np.ndarray:
    """Full 2^n x 2^n unitary, built by pushing all basis columns at once."""
    n = c.width
    if n > max_qubits:
        raise ValueError(f"width {n} exceeds the {max_qubits}-qubit unitary cap")
    dim = 2 ** n
    psi = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
    for g in c.gates:
        psi = _apply_gate(psi, g, n)
    return psi.reshape(dim, dim)


def apply_multiplexed_ry(state: np.ndarray, controls: list[int], target: int,
                         angles) -> np.ndarray:
    """Rotate the target by a distinct ry angle per control-register pattern.

    Pattern j is read with controls[0] as its most significant bit. This is
    the exact multiplexed-rotation action the short hashing circuit
    approximates, applied directly to the state without any decomposition.
    """
    k = len(controls)
    if k > 16:
        raise ValueError("at most 16 control wires")
    angles = list(angles)
    if len(angles) != 2 ** k:
        raise ValueError(f"need {2 ** k} angles, got {len(angles)}")
    n = int(round(math.log2(state.size)))
    if sorted(set(controls + [target])) != sorted(controls + [target]):
        raise ValueError("control/target wires must be distinct")
    psi = state.reshape((2,) * n).copy()
    for j, theta in enumerate(angles):
        bits = {controls[i]: (j >> (k - 1 - i)) & 1 for i in range(k)}
        ix = _slice(n, bits)
        sub = psi[ix]
        # target axis index inside the sliced view
        t_axis = target - sum(1 for cw in controls if cw < target)
        rotated = np.tensordot(ry_matrix(theta), sub, axes=(1, t_axis))
        psi[ix] = np.moveaxis(rotated, 0, t_axis)
    return psi.reshape(-1)


def states_equal_up_to_phase(a: np.ndarray, b: np.ndarray,
                             tol: float = 1e-9) -> bool:
    if a.shape != b.shape:
        return False
    overlap = np.vdot(a, b)
    return abs(abs(overlap) - 1.0) <= tol and bool(
        np.all(np.abs(a * (overlap / abs(overlap) if abs(overlap) > 0 else 1.0) - b)
               <= 10 * tol))


def _index_permutation(n: int, perm) -> np.ndarray:
    """sigma[x] = index with bit of wire w moved to wire perm[w]."""
    xs = np.arange(2 ** n)
    out = np.zeros_like(xs)
    for w in range(n):
        bit = (xs >> (n - 1 - w)) & 1
        out |= bit << (n - 1 - perm[w])
    return out


def permute_statevector(sv: np.ndarray, perm) -> np.ndarray:
    n = int(round(math.log2(sv.size)))
    sigma = _index_permutation(n, perm)
    out = np.empty_like(sv)
    out[sigma] = sv
    return out


def permute_unitary(u: np.ndarray, perm) -> np.ndarray:
    """Row-side wire permutation: (P u) with wire w relabeled to perm[w]."""
    n = int(round(math.log2(u.shape[0])))
    sigma = _index_permutation(n, perm)
    out = np.empty_like(u)
    out[sigma, :] = u
    return out


def equivalent_up_to_perm_phase(u: np.ndarray, v: np.ndarray, perm,
                                tol: float = 1e-9) -> bool:
    """True iff P(perm) @ u equals v up to one global phase."""
    if u.shape != v.shape:
        return False
    pu = permute_unitary(u, perm)
    idx = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    if abs(v[idx]) < tol or abs(pu[idx]) < tol:
        return False
    phase = v[idx] / pu[idx]
    if abs(abs(phase) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(pu * phase - v)) <= tol)
