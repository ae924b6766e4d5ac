"""
Reversible oracles U_f |x, y> = |x, y XOR f(x)> and quantum parallelism.

Register layout: the m input qubits are the high-order qubits and the k
output qubits the low-order ones, so basis index = x * 2^k + y.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import MAX_SIMULATED_QUBITS
from errors import DomainError, ParseError, ResourceLimitError
from quantum.circuits import hadamard_layer, run_circuit
from quantum.gates import Gate, apply_permutation, permutation_matrix
from quantum.state import basis_state, require_unit_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BooleanFunction:
    input_bits: int
    output_bits: int
    table: tuple

    def __post_init__(self):
        if self.input_bits < 1 or self.output_bits < 1:
            raise DomainError(
                f"need at least one input and one output bit, got m={self.input_bits}, k={self.output_bits}"
            )
        table = tuple(int(v) for v in self.table)
        if len(table) != 1 << self.input_bits:
            raise DomainError(
                f"truth table for m={self.input_bits} needs {1 << self.input_bits} entries, got {len(table)}"
            )
        limit = 1 << self.output_bits
        for x, value in enumerate(table):
            if not 0 <= value < limit:
                raise DomainError(f"f({x}) = {value} does not fit in {self.output_bits} output bits")
        object.__setattr__(self, "table", table)

    @property
    def width(self):
        return self.input_bits + self.output_bits

    def __call__(self, x):
        return self.table[x]

    @classmethod
    def from_callable(cls, input_bits, output_bits, fn):
        return cls(input_bits, output_bits, tuple(fn(x) for x in range(1 << input_bits)))

    @classmethod
    def constant(cls, input_bits, output_bits, value):
        return cls(input_bits, output_bits, (value,) * (1 << input_bits))

    @classmethod
    def identity(cls, input_bits):
        return cls(input_bits, input_bits, tuple(range(1 << input_bits)))


def oracle_permutation(f):
    k = f.output_bits
    index = np.arange(1 << f.width, dtype=np.int64)
    x = index >> k
    y = index & ((1 << k) - 1)
    table = np.asarray(f.table, dtype=np.int64)
    return (x << k) | (y ^ table[x])


def build_oracle(f):
    """Dense permutation-matrix Gate for U_f. Prefer apply_oracle for large registers."""
    return Gate(f.width, permutation_matrix(oracle_permutation(f)), name="U_f")


def apply_oracle(state, f):
    if state.num_qubits != f.width:
        raise DomainError(
            f"oracle acts on {f.width} qubits, state has {state.num_qubits}"
        )
    return apply_permutation(state, oracle_permutation(f))


def parallel_evaluate(f):
    """(1/sqrt(2^m)) * sum_x |x, f(x)>, from |0...0> via H on the inputs then U_f."""
    if f.width > MAX_SIMULATED_QUBITS:
        raise ResourceLimitError(
            f"m+k = {f.width} exceeds the simulation limit of {MAX_SIMULATED_QUBITS} qubits"
        )
    logger.debug("Evaluating f with m=%d, k=%d in superposition", f.input_bits, f.output_bits)
    state = run_circuit(basis_state(f.width, 0), hadamard_layer(range(f.input_bits)))
    return require_unit_norm(apply_oracle(state, f))


# ── Truth-table files ─────────────────────────────────────────────────────────

def parse_truth_table(lines, path=None):
    """
    Parse "m k" followed by 2^m output integers, one per line, in input order.

    Blank lines are skipped but still counted for error line numbers.
    """
    rows = [(n, line.strip()) for n, line in enumerate(lines, start=1) if line.strip()]
    if not rows:
        raise ParseError("truth table is empty", path=path, line=1)

    header_line, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"header must be 'm k', got {header!r}", path=path, line=header_line)
    try:
        m, k = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"header must hold two integers, got {header!r}", path=path, line=header_line)
    if m < 1 or k < 1:
        raise ParseError(f"m and k must be >= 1, got m={m}, k={k}", path=path, line=header_line)

    body = rows[1:]
    expected = 1 << m
    if len(body) != expected:
        last = body[-1][0] if body else header_line
        raise ParseError(
            f"expected {expected} output rows for m={m}, found {len(body)}", path=path, line=last
        )

    table = []
    for line_no, text in body:
        try:
            value = int(text)
        except ValueError:
            raise ParseError(f"output value must be an integer, got {text!r}", path=path, line=line_no)
        if not 0 <= value < 1 << k:
            raise ParseError(f"output value {value} does not fit in {k} bits", path=path, line=line_no)
        table.append(value)
    return BooleanFunction(m, k, tuple(table))


def load_truth_table(path):
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as e:
        raise ParseError(f"cannot read truth table: {e}", path=path)
    return parse_truth_table(lines, path=path)
