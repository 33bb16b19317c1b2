import numpy as np
from django.test import SimpleTestCase

from oracles import boolfn, oracle_compiler, simulator
from oracles.exceptions import SimulationError
from oracles.oracle_compiler import Circuit, ControlledPhase, Hadamard, MultiControlledZ, PhaseFlip
from oracles.simulator import StateVector

SQRT8_INV = 1 / np.sqrt(8)


def random_state(rng, n):
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector(n, amps / np.linalg.norm(amps))


def random_gate(rng, n):
    kind = rng.integers(0, 4)
    qubits = [int(q) for q in rng.permutation(np.arange(1, n + 1))]
    if kind == 0:
        return PhaseFlip(qubits[0])
    if kind == 1:
        return ControlledPhase(qubits[0], qubits[1])
    if kind == 2:
        return MultiControlledZ(tuple(qubits[:3]))
    return Hadamard(qubits[0])


class BasisStateTest(SimpleTestCase):

    def test_examples(self):
        np.testing.assert_array_equal(simulator.basis_state(3, 0).amps, np.eye(8)[0])
        np.testing.assert_array_equal(simulator.basis_state(3, 5).amps, np.eye(8)[5])

    def test_out_of_range(self):
        for n, index in ((3, 8), (3, -1), (0, 0), (21, 0)):
            with self.assertRaises(SimulationError):
                simulator.basis_state(n, index)

    def test_wrong_amplitude_count(self):
        with self.assertRaises(SimulationError):
            StateVector(3, np.zeros(4))


class ApplyGateTest(SimpleTestCase):

    def test_controlled_phase_flips_only_both_set(self):
        state = simulator.apply_gate(simulator.basis_state(3, 0b110), ControlledPhase(1, 2))
        self.assertEqual(simulator.amplitude(state, 0b110), -1)
        state = simulator.apply_gate(simulator.basis_state(3, 0b100), ControlledPhase(1, 2))
        self.assertEqual(simulator.amplitude(state, 0b100), 1)

    def test_phase_flip_leaves_zero_alone(self):
        state = simulator.apply_gate(simulator.basis_state(3, 0), PhaseFlip(1))
        np.testing.assert_array_equal(state.amps, np.eye(8)[0])
        state = simulator.apply_gate(simulator.basis_state(3, 0b001), PhaseFlip(3))
        self.assertEqual(simulator.amplitude(state, 0b001), -1)

    def test_multi_controlled_z(self):
        for index in range(8):
            state = simulator.apply_gate(simulator.basis_state(3, index), MultiControlledZ((1, 2, 3)))
            self.assertEqual(simulator.amplitude(state, index), -1 if index == 7 else 1)

    def test_hadamard_on_basis_states(self):
        plus = simulator.apply_gate(simulator.basis_state(1, 0), Hadamard(1))
        minus = simulator.apply_gate(simulator.basis_state(1, 1), Hadamard(1))
        np.testing.assert_allclose(plus.amps, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)
        np.testing.assert_allclose(minus.amps, [1 / np.sqrt(2), -1 / np.sqrt(2)], atol=1e-15)

    def test_hadamard_twice_is_identity(self):
        rng = np.random.default_rng(7)
        for q in (1, 2, 3):
            state = random_state(rng, 3)
            before = state.amps.copy()
            simulator.apply_gate(simulator.apply_gate(state, Hadamard(q)), Hadamard(q))
            np.testing.assert_allclose(state.amps, before, atol=1e-12)

    def test_gate_outside_register(self):
        with self.assertRaises(SimulationError):
            simulator.apply_gate(simulator.basis_state(2, 0), ControlledPhase(1, 3))

    def test_norm_is_preserved_by_every_gate(self):
        rng = np.random.default_rng(2024)
        for _ in range(300):
            n = int(rng.integers(3, 7))
            state = random_state(rng, n)
            simulator.apply_gate(state, random_gate(rng, n))
            self.assertAlmostEqual(state.norm(), 1.0, delta=1e-12)

    def test_diagonal_gates_commute(self):
        rng = np.random.default_rng(99)
        for _ in range(200):
            n = int(rng.integers(3, 6))
            first, second = random_gate(rng, n), random_gate(rng, n)
            if isinstance(first, Hadamard) or isinstance(second, Hadamard):
                continue
            state = random_state(rng, n)
            one_way = simulator.apply_gate(simulator.apply_gate(state.copy(), first), second)
            other_way = simulator.apply_gate(simulator.apply_gate(state.copy(), second), first)
            np.testing.assert_array_equal(one_way.amps, other_way.amps)


class ApplyCircuitTest(SimpleTestCase):

    def test_empty_circuit(self):
        state = simulator.apply_circuit(simulator.basis_state(3, 3), Circuit(3))
        np.testing.assert_array_equal(state.amps, np.eye(8)[3])

    def test_hadamard_pair(self):
        state = simulator.apply_circuit(simulator.basis_state(3, 6), Circuit(3, (Hadamard(1), Hadamard(1))))
        np.testing.assert_allclose(state.amps, np.eye(8)[6], atol=1e-15)

    def test_synthesized_oracle_on_uniform_state(self):
        circuit = oracle_compiler.synthesize(boolfn.moebius_transform(boolfn.parse_truth_table('00001111')))
        state = simulator.apply_circuit(simulator.apply_hadamard_all(simulator.basis_state(3, 0)), circuit)
        expected = [SQRT8_INV * (-1) ** boolfn.qubit_bit(i, 1, 3) for i in range(8)]
        np.testing.assert_allclose(state.amps, expected, atol=1e-12)

    def test_dimension_mismatch(self):
        with self.assertRaises(SimulationError):
            simulator.apply_circuit(simulator.basis_state(2, 0), Circuit(3))


class HadamardAllTest(SimpleTestCase):

    def test_uniform_superposition(self):
        state = simulator.apply_hadamard_all(simulator.basis_state(3, 0))
        np.testing.assert_allclose(state.amps, np.full(8, SQRT8_INV), atol=1e-15)
        np.testing.assert_allclose(state.amps, simulator.uniform_state(3).amps, atol=1e-15)

    def test_from_first_qubit_set(self):
        state = simulator.apply_hadamard_all(simulator.basis_state(3, 0b100))
        expected = [SQRT8_INV * (-1 if i >= 4 else 1) for i in range(8)]
        np.testing.assert_allclose(state.amps, expected, atol=1e-15)

    def test_involution(self):
        rng = np.random.default_rng(5)
        state = random_state(rng, 5)
        before = state.amps.copy()
        simulator.apply_hadamard_all(simulator.apply_hadamard_all(state))
        np.testing.assert_allclose(state.amps, before, atol=1e-12)


class PhaseOracleTest(SimpleTestCase):

    def test_constants(self):
        state = simulator.apply_phase_oracle(simulator.uniform_state(3), boolfn.parse_truth_table('00000000'))
        np.testing.assert_array_equal(state.amps, simulator.uniform_state(3).amps)
        state = simulator.apply_phase_oracle(simulator.uniform_state(3), boolfn.parse_truth_table('11111111'))
        np.testing.assert_array_equal(state.amps, -simulator.uniform_state(3).amps)

    def test_first_qubit(self):
        state = simulator.apply_phase_oracle(simulator.uniform_state(3), boolfn.parse_truth_table('00001111'))
        expected = [SQRT8_INV * (-1 if i >= 4 else 1) for i in range(8)]
        np.testing.assert_allclose(state.amps, expected, atol=1e-15)

    def test_dimension_mismatch(self):
        with self.assertRaises(SimulationError):
            simulator.apply_phase_oracle(simulator.uniform_state(2), boolfn.parse_truth_table('00001111'))

    def test_matches_synthesized_circuit_up_to_dropped_sign(self):
        rng = np.random.default_rng(11)
        for value in range(256):
            t = boolfn.TruthTable.from_int(3, value)
            anf = boolfn.moebius_transform(t)
            state = random_state(rng, 3)
            direct = simulator.apply_phase_oracle(state.copy(), t)
            compiled = simulator.apply_circuit(state.copy(), oracle_compiler.synthesize(anf))
            sign = -1 if anf.has_constant else 1
            np.testing.assert_allclose(direct.amps, sign * compiled.amps, atol=1e-12)


class BitOracleTest(SimpleTestCase):

    def test_flips_working_qubit_where_f_is_one(self):
        t = boolfn.parse_truth_table('0110')
        for x in range(4):
            for y in (0, 1):
                state = simulator.apply_bit_oracle(simulator.basis_state(3, (x << 1) | y), t)
                self.assertEqual(simulator.amplitude(state, (x << 1) | (y ^ t[x])), 1)

    def test_needs_one_extra_qubit(self):
        with self.assertRaises(SimulationError):
            simulator.apply_bit_oracle(simulator.basis_state(2, 0), boolfn.parse_truth_table('0110'))


class MeasurementTest(SimpleTestCase):

    def test_amplitude(self):
        self.assertEqual(simulator.amplitude(simulator.basis_state(3, 0), 0), 1)
        self.assertAlmostEqual(simulator.amplitude(simulator.uniform_state(3), 5).real, SQRT8_INV, delta=1e-15)
        with self.assertRaises(SimulationError):
            simulator.amplitude(simulator.basis_state(3, 0), 8)

    def test_probabilities(self):
        np.testing.assert_array_equal(simulator.probabilities(simulator.basis_state(3, 0)), np.eye(8)[0])
        probs = simulator.probabilities(simulator.uniform_state(3))
        np.testing.assert_allclose(probs, np.full(8, 1 / 8), atol=1e-15)
        self.assertAlmostEqual(probs.sum(), 1.0, delta=1e-9)

    def test_sample_basis_state(self):
        self.assertEqual(simulator.sample(simulator.basis_state(3, 0), 100, seed=42), {0: 100})

    def test_sample_uniform_state(self):
        histogram = simulator.sample(simulator.uniform_state(3), 8000, seed=0)
        self.assertEqual(sum(histogram.values()), 8000)
        self.assertEqual(set(histogram), set(range(8)))
        for count in histogram.values():
            self.assertTrue(800 <= count <= 1200, histogram)

    def test_sample_is_deterministic(self):
        state = simulator.uniform_state(4)
        self.assertEqual(simulator.sample(state, 500, seed=123), simulator.sample(state, 500, seed=123))
        self.assertEqual(simulator.sample(state, 500, seed=-1), simulator.sample(state, 500, seed=-1))

    def test_sample_rejects_zero_shots(self):
        with self.assertRaises(SimulationError):
            simulator.sample(simulator.basis_state(3, 0), 0, seed=0)


class EntanglementDiagnosticsTest(SimpleTestCase):

    def test_product_basis_state(self):
        profile = simulator.entanglement_diagnostics(simulator.basis_state(3, 0))
        np.testing.assert_allclose(profile.purities, (1, 1, 1), atol=1e-12)
        self.assertEqual(profile.schmidt_ranks, (1, 1, 1))
        self.assertTrue(profile.fully_product)

    def test_bell_pair_with_spectator(self):
        amps = np.zeros(8)
        amps[0b000] = amps[0b110] = 1 / np.sqrt(2)
        profile = simulator.entanglement_diagnostics(StateVector(3, amps))
        np.testing.assert_allclose(profile.purities, (0.5, 0.5, 1), atol=1e-12)
        self.assertEqual(profile.schmidt_ranks, (2, 2, 1))
        self.assertEqual(profile.entangled_qubits, (1, 2))
        self.assertFalse(profile.fully_product)

    def test_phase_kicked_state_with_quadratic_term(self):
        state = simulator.apply_phase_oracle(simulator.uniform_state(3), boolfn.parse_truth_table('01010110'))
        profile = simulator.entanglement_diagnostics(state)
        np.testing.assert_allclose(profile.purities, (0.5, 0.5, 1), atol=1e-12)
        self.assertFalse(profile.fully_product)

    def test_unnormalized_state(self):
        with self.assertRaises(SimulationError):
            simulator.entanglement_diagnostics(StateVector(3, np.full(8, 0.5)))


class EquivalentDiagonalTest(SimpleTestCase):

    def test_examples(self):
        zero = boolfn.parse_truth_table('00000000')
        self.assertEqual(simulator.equivalent_diagonal(Circuit(3), zero), simulator.DiagonalMatch(True, 1))
        circuit = Circuit(3, (PhaseFlip(1),))
        self.assertEqual(
            simulator.equivalent_diagonal(circuit, boolfn.parse_truth_table('00001111')),
            simulator.DiagonalMatch(True, 1),
        )
        self.assertEqual(
            simulator.equivalent_diagonal(circuit, boolfn.parse_truth_table('11110000')),
            simulator.DiagonalMatch(True, -1),
        )

    def test_wrong_circuit(self):
        result = simulator.equivalent_diagonal(Circuit(3, (PhaseFlip(2),)), boolfn.parse_truth_table('00001111'))
        self.assertFalse(result.match)

    def test_non_diagonal_circuit(self):
        result = simulator.equivalent_diagonal(Circuit(3, (Hadamard(1),)), boolfn.parse_truth_table('00000000'))
        self.assertFalse(result.match)

    def test_every_three_qubit_function(self):
        for value in range(256):
            t = boolfn.TruthTable.from_int(3, value)
            anf = boolfn.moebius_transform(t)
            result = simulator.equivalent_diagonal(oracle_compiler.synthesize(anf), t)
            self.assertTrue(result.match, t.bits)
            self.assertEqual(result.global_sign, -1 if anf.has_constant else 1)

    def test_four_qubit_functions_with_ccz(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            t = boolfn.TruthTable(4, tuple(rng.integers(0, 2, size=16).tolist()))
            circuit = oracle_compiler.synthesize(boolfn.moebius_transform(t))
            self.assertTrue(simulator.equivalent_diagonal(circuit, t).match, t.bits)
