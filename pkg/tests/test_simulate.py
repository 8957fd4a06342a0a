import math

import numpy as np
import pytest

from qroute.circuits import (Circuit, TAU, compose, crz, cx, h, ry, rz, swap,
                             sx, sxdg)
from qroute.simulate import (apply_multiplexed_ry, equivalent_up_to_perm_phase,
                             permute_statevector, run, ry_matrix,
                             states_equal_up_to_phase, unitary_of)


class TestRun:
    def test_empty_circuit(self):
        sv = run(Circuit(2))
        assert sv[0] == pytest.approx(1.0)

    def test_hadamard(self):
        sv = run(Circuit(1, (h(0),)))
        assert np.allclose(sv, [1 / math.sqrt(2)] * 2)

    def test_single_rotation_automaton_full_period(self):
        # rotation by 2*pi*k/p per symbol, applied p times, accepts surely
        k, p, l = 1, 5, 5
        c = Circuit(1, tuple(ry(0, 2 * TAU * k / p) for _ in range(l)))
        sv = run(c)
        assert abs(sv[0]) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_width_cap(self):
        with pytest.raises(ValueError, match="cap"):
            run(Circuit(25), max_qubits=20)

    def test_norm_preserved_long_circuit(self):
        rng = np.random.default_rng(5)
        gates = []
        for _ in range(10_000):
            q = int(rng.integers(0, 4))
            q2 = (q + 1) % 4
            gates.append([h(q), rz(q, rng.uniform(0, TAU)), cx(q, q2),
                          crz(q, q2, rng.uniform(0, TAU))][rng.integers(0, 4)])
        sv = run(Circuit(4, tuple(gates)))  # run() asserts the norm itself
        assert abs(np.linalg.norm(sv) - 1) < 1e-10

    def test_sequential_composition(self):
        rng = np.random.default_rng(11)
        a = Circuit(3, (h(0), crz(0, 2, rng.uniform(0, TAU)), cx(1, 2)))
        b = Circuit(3, (swap(0, 1), rz(2, rng.uniform(0, TAU)), h(2)))
        lhs = run(compose(a, b))
        # feed a's output through b gate by gate
        sv = run(a)
        full = unitary_of(b)
        assert np.allclose(lhs, full @ sv, atol=1e-10)


class TestSxConjugation:
    def test_sx_rz_sx_dagger_is_ry(self):
        for theta in (0.3, math.pi / 2, 2 * math.pi / 5):
            c = Circuit(1, (sx(0), rz(0, theta), sxdg(0)))
            assert np.allclose(unitary_of(c), ry_matrix(theta), atol=1e-12)

    def test_power_identity_hoists(self):
        theta, j = 2 * math.pi / 5, 4
        hoisted = Circuit(1, (sx(0),) + tuple(rz(0, theta) for _ in range(j))
                          + (sxdg(0),))
        assert np.allclose(unitary_of(hoisted),
                           np.linalg.matrix_power(ry_matrix(theta), j),
                           atol=1e-12)


class TestMultiplexedRy:
    def test_all_zero_angles(self):
        sv = run(Circuit(3, (h(0), h(1))))
        out = apply_multiplexed_ry(sv, [0, 1], 2, [0.0] * 4)
        assert np.allclose(out, sv)

    def test_one_control_pi(self):
        # control set: target flips |0> -> |1> with amplitude +1
        sv = np.zeros(4, dtype=complex)
        sv[0b10] = 1.0
        out = apply_multiplexed_ry(sv, [0], 1, [0.0, math.pi])
        assert out[0b11] == pytest.approx(1.0)

    def test_against_controlled_ry_circuit(self):
        # c-ry built from the sx-conjugated crz; oracle for the direct action
        rng = np.random.default_rng(2)
        theta = rng.uniform(0, TAU)
        prep = Circuit(2, (h(0), h(1)))
        sv = run(prep)
        direct = apply_multiplexed_ry(sv, [0], 1, [0.0, theta])
        circ = Circuit(2, (sx(1), crz(0, 1, theta), sxdg(1)))
        via_gates = unitary_of(circ) @ sv
        assert np.allclose(direct, via_gates, atol=1e-12)

    def test_against_two_control_ry_circuit(self):
        # doubly-controlled ry from square-root controlled pieces:
        # cv(c2,t) cx(c1,c2) cv~(c2,t) cx(c1,c2) cv(c1,t) with v = ry(theta/2)
        rng = np.random.default_rng(12)
        theta = rng.uniform(0, TAU)

        def cry(c, t, a):
            return (sx(t), crz(c, t, a), sxdg(t))

        gates = (cry(1, 2, theta / 2) + (cx(0, 1),) + cry(1, 2, -theta / 2)
                 + (cx(0, 1),) + cry(0, 2, theta / 2))
        circ = Circuit(3, gates)
        sv = run(Circuit(3, (h(0), h(1), h(2))))
        direct = apply_multiplexed_ry(sv, [0, 1], 2, [0, 0, 0, theta])
        assert np.allclose(direct, unitary_of(circ) @ sv, atol=1e-12)

    def test_against_dense_matrix_two_controls(self):
        rng = np.random.default_rng(3)
        angles = rng.uniform(0, TAU, 4)
        blocks = [ry_matrix(t) for t in angles]
        dense = np.zeros((8, 8), dtype=complex)
        for j, b in enumerate(blocks):
            dense[2 * j:2 * j + 2, 2 * j:2 * j + 2] = b
        sv = run(Circuit(3, (h(0), h(1), h(2))))
        out = apply_multiplexed_ry(sv, [0, 1], 2, list(angles))
        assert np.allclose(out, dense @ sv, atol=1e-12)

    def test_angle_count_checked(self):
        with pytest.raises(ValueError, match="angles"):
            apply_multiplexed_ry(np.eye(1, 8)[0].astype(complex), [0, 1], 2,
                                 [0.0])


class TestUnitaryOf:
    def test_cx_matrix(self):
        expected = np.array([[1, 0, 0, 0], [0, 1, 0, 0],
                             [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
        assert np.allclose(unitary_of(Circuit(2, (cx(0, 1),))), expected)

    def test_unitarity_random(self):
        rng = np.random.default_rng(9)
        gates = tuple(crz(int(rng.integers(0, 3)), 3, rng.uniform(0, TAU))
                      for _ in range(6)) + (h(0), h(2), cx(0, 1))
        u = unitary_of(Circuit(4, gates))
        assert np.allclose(u.conj().T @ u, np.eye(16), atol=1e-10)

    def test_width_cap(self):
        with pytest.raises(ValueError, match="cap"):
            unitary_of(Circuit(11))


class TestPermutationEquivalence:
    def test_identity(self):
        u = unitary_of(Circuit(2, (h(0), cx(0, 1))))
        assert equivalent_up_to_perm_phase(u, u, [0, 1])

    def test_swap_vs_identity(self):
        u_swap = unitary_of(Circuit(2, (swap(0, 1),)))
        assert equivalent_up_to_perm_phase(u_swap, np.eye(4), [1, 0])

    def test_global_phase_ignored(self):
        u = unitary_of(Circuit(2, (h(0), cx(0, 1))))
        assert equivalent_up_to_perm_phase(u, np.exp(0.7j) * u, [0, 1])

    def test_detects_difference(self):
        u = unitary_of(Circuit(2, (h(0),)))
        v = unitary_of(Circuit(2, (h(1),)))
        assert not equivalent_up_to_perm_phase(u, v, [0, 1])

    def test_permute_statevector_roundtrip(self):
        rng = np.random.default_rng(4)
        sv = rng.normal(size=8) + 1j * rng.normal(size=8)
        sv /= np.linalg.norm(sv)
        perm = [2, 0, 1]
        inv = [perm.index(w) for w in range(3)]
        back = permute_statevector(permute_statevector(sv, perm), inv)
        assert np.allclose(back, sv)


class TestStatesEqualUpToPhase:
    def test_phase_only(self):
        sv = run(Circuit(2, (h(0), cx(0, 1))))
        assert states_equal_up_to_phase(sv, np.exp(1.3j) * sv)

    def test_different_states(self):
        a = run(Circuit(2, (h(0),)))
        b = run(Circuit(2, (h(1),)))
        assert not states_equal_up_to_phase(a, b)
