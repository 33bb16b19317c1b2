"""
Deutsch-Jozsa runs: the refined algorithm on n query qubits, the original one
with a working qubit, the closed-form zero-state amplitude, the deterministic
classical decider and the entanglement profile of the query register.
"""

import enum
import logging
from dataclasses import dataclass

import numpy as np

from oracles import boolfn, oracle_compiler, simulator
from oracles.exceptions import PromiseViolation, SimulationError

logger = logging.getLogger(__name__)

_SQRT2_INV = 1 / np.sqrt(2)


class Verdict(enum.Enum):
    CONSTANT = 'constant'
    BALANCED = 'balanced'


class Mode(enum.Enum):
    REFINED = 'refined'
    ORIGINAL = 'original'
    CLASSICAL = 'classical'


@dataclass(frozen=True)
class DjOutcome:
    verdict: Verdict
    zero_amplitude: float
    final_probabilities: tuple
    mode: Mode
    queries_used: int = 1
    global_sign: int = 1
    working_qubit_purity: float | None = None


@dataclass(frozen=True)
class ClassicalDecision:
    verdict: Verdict
    queries_used: int
    queried_indices: tuple


def _require_promise(t):
    function_class = boolfn.classify(t)
    if not function_class.satisfies_promise:
        logger.warning('rejecting %s: weight %d is neither constant nor balanced', t.bits, t.weight)
        raise PromiseViolation(
            f'{t.bits} is neither constant nor balanced (weight {t.weight} of {len(t)})'
        )
    return function_class


def _verdict(zero_amplitude, tol):
    magnitude = abs(zero_amplitude)
    if magnitude >= 1 - tol:
        return Verdict.CONSTANT
    if magnitude <= tol:
        return Verdict.BALANCED
    # unreachable under the promise
    raise SimulationError(f'zero-state amplitude {zero_amplitude!r} is neither 0 nor +-1')


def run_refined(t, tol=simulator.TOLERANCE):
    _require_promise(t)
    report = oracle_compiler.compile_truth_table(t)

    state = simulator.basis_state(t.n, 0)
    simulator.apply_hadamard_all(state)
    simulator.apply_circuit(state, report.circuit)
    simulator.apply_hadamard_all(state)
    state.amps *= report.global_sign

    zero_amplitude = float(np.real(simulator.amplitude(state, 0)))
    verdict = _verdict(zero_amplitude, tol)
    logger.debug('refined %s: a0=%.12g -> %s', t.bits, zero_amplitude, verdict.value)
    return DjOutcome(
        verdict=verdict,
        zero_amplitude=zero_amplitude,
        final_probabilities=tuple(simulator.probabilities(state).tolist()),
        mode=Mode.REFINED,
        global_sign=report.global_sign,
    )


def run_original(t, tol=simulator.TOLERANCE):
    _require_promise(t)
    n = t.n
    if n + 1 > simulator.MAX_QUBITS:
        raise SimulationError(f'original algorithm needs n+1 <= {simulator.MAX_QUBITS} qubits, got n={n}')

    # working qubit is qubit n+1, prepared as |1> then H -> |->
    state = simulator.basis_state(n + 1, 1)
    simulator.apply_gate(state, oracle_compiler.Hadamard(n + 1))
    for q in range(1, n + 1):
        simulator.apply_gate(state, oracle_compiler.Hadamard(q))
    simulator.apply_bit_oracle(state, t)

    kicked = simulator.apply_phase_oracle(simulator.uniform_state(n), t).amps
    minus = np.array([_SQRT2_INV, -_SQRT2_INV])
    if not np.allclose(state.amps, np.kron(kicked, minus), rtol=0, atol=tol):
        raise SimulationError(f'f-controlled NOT on {t.bits} did not factor as (phase-kicked state) x |->')
    purity = simulator.entanglement_diagnostics(state, tol).purities[n]

    for q in range(1, n + 1):
        simulator.apply_gate(state, oracle_compiler.Hadamard(q))

    pairs = state.amps.reshape(1 << n, 2)
    query_register = (pairs[:, 0] - pairs[:, 1]) * _SQRT2_INV
    zero_amplitude = float(np.real(query_register[0]))
    verdict = _verdict(zero_amplitude, tol)
    logger.debug('original %s: a0=%.12g, working purity=%.12g -> %s', t.bits, zero_amplitude, purity, verdict.value)
    return DjOutcome(
        verdict=verdict,
        zero_amplitude=zero_amplitude,
        final_probabilities=tuple((np.abs(pairs) ** 2).sum(axis=1).tolist()),
        mode=Mode.ORIGINAL,
        working_qubit_purity=purity,
    )


def zero_amplitude_formula(t):
    signs = 1 - 2 * t.as_array().astype(np.int64)
    return float(signs.sum()) / len(t)


def classical_decide(t):
    _require_promise(t)
    queried = tuple(range((1 << (t.n - 1)) + 1))
    answers = {t[i] for i in queried}
    verdict = Verdict.CONSTANT if len(answers) == 1 else Verdict.BALANCED
    return ClassicalDecision(verdict=verdict, queries_used=len(queried), queried_indices=queried)


def entanglement_profile(t, tol=simulator.TOLERANCE):
    _require_promise(t)
    psi2 = simulator.apply_phase_oracle(simulator.uniform_state(t.n), t)
    return simulator.entanglement_diagnostics(psi2, tol)


def expected_verdict(function_class):
    return Verdict.CONSTANT if function_class.is_constant else Verdict.BALANCED
