import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qroute.circuits import (Circuit, GateKind, TAU, cnot_count, crz, cx, h,
                             rz)
from qroute.rewrite import (cancel_cx_pairs, decompose_cp, decompose_crz,
                            decompose_swap, fuse_cp_swap, fuse_crz_swap,
                            merge_adjacent_crz)
from qroute.simulate import run, unitary_of

# dense 4x4 oracles built directly from the definitions, independent of the
# simulator's gate application path
SWAP_MATRIX = np.array([[1, 0, 0, 0],
                        [0, 0, 1, 0],
                        [0, 1, 0, 0],
                        [0, 0, 0, 1]], dtype=complex)


def crz_matrix(theta):
    return np.diag([1, 1, np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def cp_matrix(theta):
    return np.diag([1, 1, 1, np.exp(1j * theta)])


def phases_match(u, v, tol=1e-12):
    idx = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    phase = v[idx] / u[idx]
    return np.max(np.abs(u * phase - v)) <= tol


def unitary_of_gates(gates):
    return unitary_of(Circuit(2, tuple(gates)))


RNG = np.random.default_rng(20240814)
ANGLES = [0.0, math.pi / 2, math.pi, 2 * math.pi / 5, math.pi / 4]
ANGLES += list(RNG.uniform(0, TAU, 20))


class TestDecomposeCrz:
    def test_zero_angle_is_identity(self):
        u = unitary_of_gates(decompose_crz(0, 1, 0.0))
        assert phases_match(u, np.eye(4))

    @pytest.mark.parametrize("theta", ANGLES)
    def test_matches_matrix(self, theta):
        u = unitary_of_gates(decompose_crz(0, 1, theta))
        assert phases_match(u, crz_matrix(theta))

    @pytest.mark.parametrize("theta", ANGLES)
    def test_two_cnots(self, theta):
        gates = decompose_crz(0, 1, theta)
        assert sum(g.kind is GateKind.CX for g in gates) == 2


class TestDecomposeSwap:
    def test_three_cnots(self):
        assert len(decompose_swap(0, 1)) == 3

    def test_basis_state(self):
        sv = run(Circuit(2, tuple(decompose_swap(0, 1))), initial=0b01)
        assert abs(sv[0b10]) == pytest.approx(1.0)

    def test_matches_matrix(self):
        assert phases_match(unitary_of_gates(decompose_swap(0, 1)), SWAP_MATRIX)


class TestFuseCrzSwap:
    @pytest.mark.parametrize("theta", ANGLES)
    def test_three_cnots(self, theta):
        gates = fuse_crz_swap(0, 1, theta)
        assert sum(g.kind is GateKind.CX for g in gates) == 3

    def test_zero_angle_reduces_to_swap(self):
        gates = fuse_crz_swap(0, 1, 0.0)
        assert [g.kind for g in gates] == [GateKind.CX] * 3
        assert phases_match(unitary_of_gates(gates), SWAP_MATRIX)

    @pytest.mark.parametrize("theta", ANGLES)
    def test_matches_swap_after_crz(self, theta):
        u = unitary_of_gates(fuse_crz_swap(0, 1, theta))
        assert phases_match(u, SWAP_MATRIX @ crz_matrix(theta))

    @pytest.mark.parametrize("theta", [2 * math.pi / 5, 1.0])
    def test_forward_then_backward_is_identity(self, theta):
        gates = fuse_crz_swap(0, 1, theta) + fuse_crz_swap(1, 0, -theta)
        assert phases_match(unitary_of_gates(gates), np.eye(4))


class TestFuseCpSwap:
    @pytest.mark.parametrize("theta", ANGLES)
    def test_three_cnots(self, theta):
        gates = fuse_cp_swap(0, 1, theta)
        assert sum(g.kind is GateKind.CX for g in gates) == 3

    def test_zero_angle_is_swap(self):
        assert phases_match(unitary_of_gates(fuse_cp_swap(0, 1, 0.0)),
                            SWAP_MATRIX)

    @pytest.mark.parametrize("theta", ANGLES)
    def test_matches_swap_after_cp(self, theta):
        u = unitary_of_gates(fuse_cp_swap(0, 1, theta))
        assert phases_match(u, SWAP_MATRIX @ cp_matrix(theta))


class TestDecomposeCp:
    @pytest.mark.parametrize("theta", ANGLES)
    def test_matches_matrix(self, theta):
        u = unitary_of_gates(decompose_cp(0, 1, theta))
        assert phases_match(u, cp_matrix(theta))

    def test_two_cnots(self):
        gates = decompose_cp(0, 1, math.pi / 4)
        assert sum(g.kind is GateKind.CX for g in gates) == 2


class TestCancelCxPairs:
    def test_adjacent_pair(self):
        c = Circuit(2, (cx(0, 1), cx(0, 1)))
        assert cancel_cx_pairs(c).gates == ()

    def test_disjoint_wire_between(self):
        c = Circuit(3, (cx(0, 1), rz(2, 1.0), cx(0, 1)))
        assert cancel_cx_pairs(c).gates == (rz(2, 1.0),)

    def test_blocked_by_target_wire(self):
        c = Circuit(2, (cx(0, 1), rz(1, 1.0), cx(0, 1)))
        assert cancel_cx_pairs(c).gates == c.gates

    def test_cascaded_cancellation(self):
        c = Circuit(2, (cx(0, 1), cx(1, 0), cx(1, 0), cx(0, 1)))
        assert cancel_cx_pairs(c).gates == ()


class TestMergeAdjacentCrz:
    def test_merges_same_pair(self):
        c = Circuit(2, (crz(0, 1, 1.0), crz(0, 1, 0.5)))
        merged = merge_adjacent_crz(c)
        assert len(merged.gates) == 1
        assert merged.gates[0].angle == pytest.approx(1.5)

    def test_blocked_by_intervening_gate(self):
        c = Circuit(2, (crz(0, 1, 1.0), h(0), crz(0, 1, 0.5)))
        assert merge_adjacent_crz(c).gates == c.gates

    @pytest.mark.parametrize("a,b", [(5.0, 4.0), (3.5, 3.5)])
    def test_merge_exact_when_sum_wraps_past_2pi(self, a, b):
        # crz is 4pi-periodic; merging must not fold the sum into [0, 2pi)
        c = Circuit(2, (h(0), h(1), crz(0, 1, a), crz(0, 1, b)))
        merged = merge_adjacent_crz(c)
        assert np.allclose(run(c), run(merged), atol=1e-12)


@st.composite
def small_logical_circuit(draw):
    width = draw(st.integers(2, 5))
    n_gates = draw(st.integers(0, 12))
    gates = []
    for _ in range(n_gates):
        q = draw(st.integers(0, width - 1))
        q2 = draw(st.integers(0, width - 2))
        q2 = q2 if q2 < q else q2 + 1
        theta = draw(st.floats(0, TAU - 1e-9))
        kind = draw(st.sampled_from(["h", "rz", "cx", "crz"]))
        gates.append({"h": h(q), "rz": rz(q, theta), "cx": cx(q, q2),
                      "crz": crz(q, q2, theta)}[kind])
    return Circuit(width, tuple(gates))


class TestRewritePropertiesPreserveSemantics:
    @given(small_logical_circuit())
    @settings(max_examples=60, deadline=None)
    def test_cancel_preserves_state_and_count(self, c):
        out = cancel_cx_pairs(c)
        assert cnot_count(out) <= cnot_count(c)
        assert np.allclose(run(c), run(out), atol=1e-10)

    @given(small_logical_circuit())
    @settings(max_examples=60, deadline=None)
    def test_merge_preserves_state(self, c):
        out = merge_adjacent_crz(c)
        assert len(out.gates) <= len(c.gates)
        assert np.allclose(run(c), run(out), atol=1e-10)
