"""
Dense statevector simulator for the phase-oracle gate alphabet.

Amplitude ``amps[i]`` belongs to the basis state whose big-endian expansion
of ``i`` gives the qubit values, qubit 1 being the most significant bit.
Gates mutate the state in place and return it, so a StateVector must not be
shared between concurrent writers.
"""

import logging
from dataclasses import dataclass

import numpy as np

from oracles.exceptions import SimulationError
from oracles.oracle_compiler import ControlledPhase, Hadamard, MultiControlledZ, PhaseFlip

logger = logging.getLogger(__name__)

MAX_QUBITS = 20
EQUIVALENCE_MAX_QUBITS = 12
TOLERANCE = 1e-9
NORM_TOLERANCE = 1e-6

_SQRT2_INV = 1 / np.sqrt(2)


class StateVector:

    def __init__(self, n, amps):
        if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
            raise SimulationError(f'qubit count must be in 1..{MAX_QUBITS}, got {n!r}')
        amps = np.ascontiguousarray(amps, dtype=complex)
        if amps.shape != (1 << n,):
            raise SimulationError(f'expected {1 << n} amplitudes for n={n}, got shape {amps.shape}')
        self.n = n
        self.amps = amps

    def __repr__(self):
        return f'StateVector(n={self.n})'

    def copy(self):
        return StateVector(self.n, self.amps.copy())

    def tensor(self):
        """View of the amplitudes with one axis of length 2 per qubit."""
        return self.amps.reshape((2,) * self.n)

    def norm(self):
        return float(np.linalg.norm(self.amps))


@dataclass(frozen=True)
class EntanglementProfile:
    purities: tuple
    schmidt_ranks: tuple
    fully_product: bool

    @property
    def entangled_qubits(self):
        return tuple(q for q, rank in enumerate(self.schmidt_ranks, start=1) if rank > 1)


@dataclass(frozen=True)
class DiagonalMatch:
    match: bool
    global_sign: int


def _slot(n, assignments):
    index = [slice(None)] * n
    for qubit, value in assignments:
        index[qubit - 1] = value
    return tuple(index)


def _check_gate(gate, n):
    for q in gate.qubits:
        if not 1 <= q <= n:
            raise SimulationError(f'{type(gate).__name__} on qubit {q} outside 1..{n}')


def basis_state(n, index):
    if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
        raise SimulationError(f'qubit count must be in 1..{MAX_QUBITS}, got {n!r}')
    if not 0 <= index < 1 << n:
        raise SimulationError(f'basis index {index} out of range for n={n}')
    amps = np.zeros(1 << n, dtype=complex)
    amps[index] = 1.0
    return StateVector(n, amps)


def uniform_state(n):
    return StateVector(n, np.full(1 << n, 2 ** (-n / 2), dtype=complex))


def apply_gate(s, g):
    _check_gate(g, s.n)
    view = s.tensor()
    if isinstance(g, Hadamard):
        zero = view[_slot(s.n, [(g.qubit, 0)])].copy()
        one = view[_slot(s.n, [(g.qubit, 1)])].copy()
        view[_slot(s.n, [(g.qubit, 0)])] = (zero + one) * _SQRT2_INV
        view[_slot(s.n, [(g.qubit, 1)])] = (zero - one) * _SQRT2_INV
    elif isinstance(g, (PhaseFlip, ControlledPhase, MultiControlledZ)):
        view[_slot(s.n, [(q, 1) for q in g.qubits])] *= -1
    else:
        raise SimulationError(f'unsupported gate {g!r}')
    return s


def apply_circuit(s, c):
    if c.n != s.n:
        raise SimulationError(f'circuit has {c.n} qubits, state has {s.n}')
    for gate in c.gates:
        apply_gate(s, gate)
    return s


def apply_hadamard_all(s):
    for q in range(1, s.n + 1):
        apply_gate(s, Hadamard(q))
    return s


def apply_phase_oracle(s, t):
    if t.n != s.n:
        raise SimulationError(f'truth table has {t.n} inputs, state has {s.n} qubits')
    s.amps *= np.where(t.as_array() == 1, -1.0, 1.0)
    return s


def apply_bit_oracle(s, t):
    """f-controlled NOT on query register plus one working qubit (least significant)."""
    if s.n != t.n + 1:
        raise SimulationError(f'bit oracle for n={t.n} needs {t.n + 1} qubits, state has {s.n}')
    pairs = s.amps.reshape(1 << t.n, 2)
    flip = t.as_array() == 1
    pairs[flip] = pairs[flip][:, ::-1]
    return s


def amplitude(s, index):
    if not 0 <= index < 1 << s.n:
        raise SimulationError(f'basis index {index} out of range for n={s.n}')
    return complex(s.amps[index])


def probabilities(s):
    return np.abs(s.amps) ** 2


def sample(s, shots, seed):
    return sample_probabilities(probabilities(s), shots, seed)


def sample_probabilities(probs, shots, seed):
    """Inverse-CDF draws from a probability vector over basis indices."""
    if not isinstance(shots, int) or shots < 1:
        raise SimulationError(f'shots must be a positive integer, got {shots!r}')
    cumulative = np.cumsum(np.asarray(probs, dtype=float))
    cumulative /= cumulative[-1]
    rng = np.random.default_rng(int(seed) % (1 << 64))
    draws = np.searchsorted(cumulative, rng.random(shots), side='right')
    draws = np.minimum(draws, len(cumulative) - 1)
    indices, counts = np.unique(draws, return_counts=True)
    return {int(i): int(c) for i, c in zip(indices, counts)}


def entanglement_diagnostics(s, tol=TOLERANCE):
    deviation = abs(s.norm() - 1.0)
    if deviation > NORM_TOLERANCE:
        raise SimulationError(f'state is not normalized (|norm - 1| = {deviation:.3g})')
    view = s.tensor()
    purities = []
    ranks = []
    for axis in range(s.n):
        cut = np.moveaxis(view, axis, 0).reshape(2, -1)
        rho = cut @ cut.conj().T
        purities.append(float(np.real(np.trace(rho @ rho))))
        ranks.append(int(np.sum(np.linalg.svd(cut, compute_uv=False) > tol)))
    fully_product = all(p >= 1 - tol for p in purities)
    return EntanglementProfile(tuple(purities), tuple(ranks), fully_product)


def equivalent_diagonal(c, t, tol=TOLERANCE):
    """Does circuit ``c`` act as ``sign * (-1)^f(x)`` on every basis state?"""
    if c.n != t.n:
        raise SimulationError(f'circuit has {c.n} qubits, truth table has {t.n} inputs')
    if c.n > EQUIVALENCE_MAX_QUBITS:
        raise SimulationError(f'equivalence sweep supports n <= {EQUIVALENCE_MAX_QUBITS}, got {c.n}')
    sign = None
    for index in range(1 << c.n):
        out = apply_circuit(basis_state(c.n, index), c).amps
        phase = -1.0 if t[index] else 1.0
        diagonal = out[index]
        if sign is None:
            sign = 1 if np.real(diagonal) * phase >= 0 else -1
        out[index] = diagonal - sign * phase
        if np.max(np.abs(out.real)) > tol or np.max(np.abs(out.imag)) > tol:
            logger.debug('circuit deviates from %s at basis index %d', t.bits, index)
            return DiagonalMatch(False, sign)
    return DiagonalMatch(True, sign)
