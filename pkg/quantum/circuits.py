"""
Circuits as ordered gate steps, and the GHZ construction.

The GHZ circuit follows the three-qubit drawing: a Hadamard on every wire, a
CZ from qubit 0 to each other qubit, then a second Hadamard on qubits 1..n-1.
H-CZ-H on a target equals CNOT, so this is the CNOT fan-out read another way.
"""

import logging
from dataclasses import dataclass

from config import MAX_SIMULATED_QUBITS, MIN_GHZ_QUBITS
from errors import DomainError, ResourceLimitError
from quantum.gates import apply_unitary, standard_gate
from quantum.state import basis_state, require_unit_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CircuitStep:
    gate: object
    targets: tuple

    def __post_init__(self):
        targets = tuple(int(t) for t in self.targets)
        if len(targets) != self.gate.arity:
            raise DomainError(
                f"step with arity-{self.gate.arity} gate given {len(targets)} targets"
            )
        if len(set(targets)) != len(targets):
            raise DomainError(f"step targets must be distinct, got {targets}")
        if any(t < 0 for t in targets):
            raise DomainError(f"step targets must be non-negative, got {targets}")
        object.__setattr__(self, "targets", targets)


def run_circuit(initial, steps):
    state = initial
    for position, step in enumerate(steps):
        if max(step.targets) >= initial.num_qubits:
            raise DomainError(
                f"step {position} targets {step.targets} exceed a {initial.num_qubits}-qubit register"
            )
        state = apply_unitary(state, step.gate, step.targets)
    return state


def hadamard_layer(qubits):
    h = standard_gate("H")
    return [CircuitStep(h, (q,)) for q in qubits]


def uniform_superposition(num_qubits):
    """H on every qubit of |0...0>: all amplitudes 2^(-n/2)."""
    return run_circuit(basis_state(num_qubits, 0), hadamard_layer(range(num_qubits)))


def ghz_circuit(n, couplings=True):
    if n < MIN_GHZ_QUBITS:
        raise DomainError(f"GHZ state needs at least {MIN_GHZ_QUBITS} qubits, got {n}")
    steps = hadamard_layer(range(n))
    if couplings:
        cz = standard_gate("CZ")
        steps += [CircuitStep(cz, (0, q)) for q in range(1, n)]
    steps += hadamard_layer(range(1, n))
    return steps


def ghz_state(n):
    if n > MAX_SIMULATED_QUBITS:
        raise ResourceLimitError(
            f"{n} qubits exceeds the simulation limit of {MAX_SIMULATED_QUBITS}"
        )
    steps = ghz_circuit(n)
    logger.debug("Preparing %d-qubit GHZ state with %d steps", n, len(steps))
    return require_unit_norm(run_circuit(basis_state(n, 0), steps))
