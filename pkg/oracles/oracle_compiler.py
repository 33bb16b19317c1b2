"""
Phase-oracle compiler.

An ANF ``f = XOR of monomials`` becomes the diagonal unitary
``|x> -> (-1)^f(x) |x>`` by emitting one phase gate per monomial:
``{j}`` is a phase flip on qubit j, ``{j, k}`` a controlled phase, and larger
monomials a multi-controlled Z. The constant monomial only contributes a
global sign and is dropped.
"""

import enum
import logging
import re
from dataclasses import dataclass, field

from oracles import boolfn
from oracles.exceptions import CircuitError, CircuitSyntaxError, ConstructionError

logger = logging.getLogger(__name__)

CONSTRUCTION_QUBITS = 3


def _check_qubits(qubits, n):
    for q in qubits:
        if not isinstance(q, int) or not 1 <= q <= n:
            raise CircuitError(f'qubit index {q} outside 1..{n}')


@dataclass(frozen=True)
class PhaseFlip:
    qubit: int

    mnemonic = 'z'

    @property
    def qubits(self):
        return (self.qubit,)


@dataclass(frozen=True)
class ControlledPhase:
    """Symmetric in its qubits, stored with j < k."""

    j: int
    k: int

    mnemonic = 'cz'

    def __post_init__(self):
        if self.j == self.k:
            raise CircuitError(f'controlled phase needs two distinct qubits, got {self.j} twice')
        if self.j > self.k:
            j, k = self.k, self.j
            object.__setattr__(self, 'j', j)
            object.__setattr__(self, 'k', k)

    @property
    def qubits(self):
        return (self.j, self.k)


@dataclass(frozen=True)
class MultiControlledZ:
    targets: tuple

    mnemonic = 'ccz'

    def __post_init__(self):
        targets = tuple(sorted(self.targets))
        if len(set(targets)) != len(targets):
            raise CircuitError(f'duplicate qubit in {list(self.targets)}')
        if len(targets) < 3:
            raise CircuitError('multi-controlled Z acts on at least three qubits')
        object.__setattr__(self, 'targets', targets)

    @property
    def qubits(self):
        return self.targets


@dataclass(frozen=True)
class Hadamard:
    qubit: int

    mnemonic = 'h'

    @property
    def qubits(self):
        return (self.qubit,)


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise CircuitError(f'qubit count must be a positive integer, got {self.n!r}')
        gates = tuple(self.gates)
        for gate in gates:
            _check_qubits(gate.qubits, self.n)
        object.__setattr__(self, 'gates', gates)

    def __iter__(self):
        return iter(self.gates)

    def __len__(self):
        return len(self.gates)


class ConstructionType(enum.IntEnum):
    TYPE_1 = 1
    TYPE_2 = 2
    TYPE_3 = 3
    TYPE_4 = 4

    @property
    def label(self):
        return f'Type{self.value}'


@dataclass(frozen=True)
class GateCounts:
    phase_flip: int = 0
    controlled_phase: int = 0
    multi_controlled_z: int = 0
    hadamard: int = 0

    @property
    def total(self):
        return self.phase_flip + self.controlled_phase + self.multi_controlled_z + self.hadamard


@dataclass(frozen=True)
class SynthesisReport:
    truth_table: boolfn.TruthTable
    anf: boolfn.Anf
    circuit: Circuit
    construction_type: ConstructionType | None
    gate_counts: GateCounts = field(default_factory=GateCounts)
    dropped_constant: bool = False

    @property
    def global_sign(self):
        return -1 if self.dropped_constant else 1


def synthesize(a):
    phase_flips = []
    controlled_phases = []
    multi_controlled = []
    for monomial in a.sorted_monomials():
        if len(monomial) == 1:
            phase_flips.append(PhaseFlip(monomial[0]))
        elif len(monomial) == 2:
            controlled_phases.append(ControlledPhase(*monomial))
        elif len(monomial) > 2:
            multi_controlled.append(MultiControlledZ(monomial))
    phase_flips.sort(key=lambda g: g.qubit)
    controlled_phases.sort(key=lambda g: g.qubits)
    multi_controlled.sort(key=lambda g: g.qubits)
    return Circuit(a.n, tuple(phase_flips + controlled_phases + multi_controlled))


def gate_counts(c):
    tally = {PhaseFlip: 0, ControlledPhase: 0, MultiControlledZ: 0, Hadamard: 0}
    for gate in c.gates:
        tally[type(gate)] += 1
    return GateCounts(
        phase_flip=tally[PhaseFlip],
        controlled_phase=tally[ControlledPhase],
        multi_controlled_z=tally[MultiControlledZ],
        hadamard=tally[Hadamard],
    )


def classify_construction(c):
    if c.n != CONSTRUCTION_QUBITS:
        raise ConstructionError(f'construction types are defined for n=3 only, got n={c.n}')
    counts = gate_counts(c)
    if counts.multi_controlled_z or counts.hadamard:
        raise ConstructionError('construction types cover phase-flip and controlled-phase gates only')
    if counts.controlled_phase > 3:
        raise ConstructionError(f'{counts.controlled_phase} controlled-phase gates, at most 3 expected')
    return ConstructionType(1 + counts.controlled_phase)


def compile_truth_table(t):
    """Truth table -> ANF -> circuit, with counts and (n=3) construction type."""
    anf = boolfn.moebius_transform(t)
    circuit = synthesize(anf)
    construction_type = None
    # types only describe constant or balanced three-qubit oracles
    if t.n == CONSTRUCTION_QUBITS and boolfn.classify(t).satisfies_promise:
        construction_type = classify_construction(circuit)
    logger.debug('compiled %s -> %s (%d gates)', t.bits, anf.format(), len(circuit))
    return SynthesisReport(
        truth_table=t,
        anf=anf,
        circuit=circuit,
        construction_type=construction_type,
        gate_counts=gate_counts(circuit),
        dropped_constant=anf.has_constant,
    )


def emit_text(c):
    lines = [f'qubits {c.n}']
    for gate in c.gates:
        lines.append(' '.join([gate.mnemonic, *(str(q) for q in gate.qubits)]))
    return '\n'.join(lines) + '\n'


_DIGITS = re.compile(r'\d+')


def _parse_indices(tokens, n, line):
    indices = []
    for token in tokens:
        if not _DIGITS.fullmatch(token):
            raise CircuitSyntaxError(f'qubit index {token!r} is not a positive integer', line)
        q = int(token)
        if not 1 <= q <= n:
            raise CircuitSyntaxError(f'qubit index {q} out of range 1..{n}', line)
        indices.append(q)
    if len(set(indices)) != len(indices):
        raise CircuitSyntaxError(f'duplicate qubit in {" ".join(tokens)}', line)
    return indices


def _build_gate(mnemonic, indices, line):
    if mnemonic in ('z', 'h'):
        if len(indices) != 1:
            raise CircuitSyntaxError(f'{mnemonic} takes one qubit, got {len(indices)}', line)
        return PhaseFlip(indices[0]) if mnemonic == 'z' else Hadamard(indices[0])
    if mnemonic == 'cz':
        if len(indices) != 2:
            raise CircuitSyntaxError(f'cz takes two qubits, got {len(indices)}', line)
        return ControlledPhase(*indices)
    if mnemonic == 'ccz':
        if len(indices) < 3:
            raise CircuitSyntaxError(f'ccz takes at least three qubits, got {len(indices)}', line)
        return MultiControlledZ(tuple(indices))
    raise CircuitSyntaxError(f'unknown mnemonic {mnemonic!r}', line)


def parse_text(text):
    n = None
    gates = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if n is None:
            keyword, *count = line.split()
            if keyword != 'qubits':
                raise CircuitSyntaxError('missing "qubits <n>" header', line_no)
            if len(count) != 1 or not _DIGITS.fullmatch(count[0]) or int(count[0]) < 1:
                raise CircuitSyntaxError(f'invalid "qubits" header {line!r}, expected "qubits <n>"', line_no)
            n = int(count[0])
            continue
        mnemonic, *tokens = line.split()
        if mnemonic == 'qubits':
            raise CircuitSyntaxError('duplicate "qubits" header', line_no)
        gates.append(_build_gate(mnemonic, _parse_indices(tokens, n, line_no), line_no))
    if n is None:
        raise CircuitSyntaxError('missing "qubits <n>" header')
    return Circuit(n, tuple(gates))
