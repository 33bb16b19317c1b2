"""
Boolean functions on n inputs: truth tables, algebraic normal form,
constant/balanced classification and enumeration of balanced functions.

Index ``i`` of a truth table addresses the input whose big-endian binary
expansion ``b1 b2 ... bn`` assigns ``bj`` to qubit ``j``; qubit 1 is the most
significant bit, so for n = 3 index 1 is ``001`` (qubit 3 set).
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from oracles.exceptions import AnfError, TruthTableError

logger = logging.getLogger(__name__)

ENUMERATION_MIN_QUBITS = 2
ENUMERATION_MAX_QUBITS = 4


class FunctionClass(enum.Enum):
    CONSTANT_0 = 'constant0'
    CONSTANT_1 = 'constant1'
    BALANCED = 'balanced'
    OTHER = 'other'

    @property
    def satisfies_promise(self):
        return self is not FunctionClass.OTHER

    @property
    def is_constant(self):
        return self in (FunctionClass.CONSTANT_0, FunctionClass.CONSTANT_1)


def qubit_bit(index, qubit, n):
    """Value of ``qubit`` (1-based) in basis index ``index``."""
    return (index >> (n - qubit)) & 1


@dataclass(frozen=True)
class TruthTable:
    n: int
    values: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise TruthTableError(f'qubit count must be a positive integer, got {self.n!r}')
        values = tuple(self.values)
        if len(values) != 1 << self.n:
            raise TruthTableError(
                f'expected {1 << self.n} entries for n={self.n}, got {len(values)}'
            )
        if any(v not in (0, 1) for v in values):
            raise TruthTableError('truth table entries must be 0 or 1')
        values = tuple(int(v) for v in values)
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_function(cls, n, fn):
        return cls(n, tuple(int(bool(fn(i))) for i in range(1 << n)))

    @classmethod
    def from_int(cls, n, value):
        size = 1 << n
        return cls(n, tuple((value >> (size - 1 - i)) & 1 for i in range(size)))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __str__(self):
        return self.bits

    @property
    def bits(self):
        return ''.join(str(v) for v in self.values)

    @property
    def weight(self):
        return sum(self.values)

    def as_int(self):
        return int(self.bits, 2)

    def as_array(self):
        return np.fromiter(self.values, dtype=np.uint8, count=len(self.values))


@dataclass(frozen=True)
class Anf:
    """XOR of monomials; the empty monomial is the constant 1."""

    n: int
    monomials: frozenset

    def __post_init__(self):
        monomials = frozenset(frozenset(m) for m in self.monomials)
        for monomial in monomials:
            if any(not isinstance(q, int) or not 1 <= q <= self.n for q in monomial):
                raise AnfError(f'monomial {sorted(monomial)} outside qubits 1..{self.n}')
        object.__setattr__(self, 'monomials', monomials)

    @property
    def has_constant(self):
        return frozenset() in self.monomials

    def sorted_monomials(self):
        """Monomials as sorted tuples, ordered by degree then lexicographically."""
        return sorted((tuple(sorted(m)) for m in self.monomials), key=lambda m: (len(m), m))

    def format(self):
        if not self.monomials:
            return '0'
        terms = ['1' if not m else ''.join(f'x{q}' for q in m) for m in self.sorted_monomials()]
        return ' + '.join(terms)


def parse_truth_table(text):
    text = text.strip()
    if not text or any(c not in '01' for c in text):
        raise TruthTableError(f'truth table must contain only 0 and 1, got {text!r}')
    length = len(text)
    if length < 2 or length & (length - 1):
        raise TruthTableError(f'length {length} is not a power of two >= 2')
    return TruthTable(length.bit_length() - 1, tuple(int(c) for c in text))


def classify(t):
    weight = t.weight
    if weight == 0:
        return FunctionClass.CONSTANT_0
    if weight == len(t):
        return FunctionClass.CONSTANT_1
    if weight == len(t) // 2:
        return FunctionClass.BALANCED
    return FunctionClass.OTHER


def _butterfly(coefficients, n):
    # XOR the lower half into the upper half along every axis; self-inverse.
    cube = np.array(coefficients, dtype=np.uint8).reshape((2,) * n)
    for axis in range(n):
        lower = [slice(None)] * n
        upper = [slice(None)] * n
        lower[axis] = 0
        upper[axis] = 1
        cube[tuple(upper)] ^= cube[tuple(lower)]
    return cube.reshape(-1)


def _mask_to_monomial(mask, n):
    return frozenset(q for q in range(1, n + 1) if qubit_bit(mask, q, n))


def _monomial_to_mask(monomial, n):
    return sum(1 << (n - q) for q in monomial)


def moebius_transform(t):
    coefficients = _butterfly(t.values, t.n)
    monomials = frozenset(
        _mask_to_monomial(mask, t.n) for mask in np.flatnonzero(coefficients).tolist()
    )
    return Anf(t.n, monomials)


def anf_to_truth_table(a):
    coefficients = np.zeros(1 << a.n, dtype=np.uint8)
    for monomial in a.monomials:
        coefficients[_monomial_to_mask(monomial, a.n)] = 1
    return TruthTable(a.n, tuple(_butterfly(coefficients, a.n).tolist()))


def degree(a):
    return max((len(m) for m in a.monomials), default=0)


def complement(t):
    return TruthTable(t.n, tuple(1 - v for v in t.values))


def canonical(t):
    return t if t.values[0] == 0 else complement(t)


def enumerate_balanced(n):
    if not isinstance(n, int) or not ENUMERATION_MIN_QUBITS <= n <= ENUMERATION_MAX_QUBITS:
        raise TruthTableError(
            f'enumeration supports {ENUMERATION_MIN_QUBITS} <= n <= {ENUMERATION_MAX_QUBITS}, got {n}'
        )
    size = 1 << n
    values = sorted(
        sum(1 << (size - 1 - i) for i in ones)
        for ones in itertools.combinations(range(size), size // 2)
    )
    assert len(values) == comb(size, size // 2)
    logger.debug('enumerated %d balanced functions for n=%d', len(values), n)
    return [TruthTable.from_int(n, value) for value in values]


def canonical_classes(n):
    """Canonical representatives of the complement pairs of balanced functions."""
    return [t for t in enumerate_balanced(n) if t.values[0] == 0]
