"""Classical reference implementations for tests and acceptance checks.

Everything here is deliberately independent of the gate kernels: bit
counting is plain integer arithmetic, Fourier states come from the
defining sum, circuit unitaries are built as explicit dense matrices.
Clarity over speed; matrix construction is capped at 12 qubits.
"""

import numpy as np

from .circuit import Circuit, Gate, Hadamard, Phase, Swap, X
from .qarray import IndexPredicate
from .statevector import StateVector

__all__ = [
    "REFERENCE_MAX_QUBITS", "ref_popcount", "ref_dft_state", "ref_dft_matrix",
    "ref_array_update", "ref_gate_matrix", "ref_circuit_matrix",
]

REFERENCE_MAX_QUBITS = 12

_H2 = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
_X2 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_I2 = np.eye(2, dtype=np.complex128)


def _check_width(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= REFERENCE_MAX_QUBITS:
        raise ValueError(
            f"reference implementations handle 1..{REFERENCE_MAX_QUBITS} "
            f"qubits, got {n!r}")


def ref_popcount(bits) -> int:
    """Number of 1 bits in a 0/1 sequence."""
    total = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        total += b
    return total


def ref_dft_state(d: int, n: int) -> StateVector:
    """Fourier image of |d> from the defining sum:
    amplitude_k = 2**(-n/2) * e^{i*2*pi*k*d/2**n}."""
    _check_width(n)
    dim = 1 << n
    if not isinstance(d, int) or not 0 <= d < dim:
        raise ValueError(f"value {d!r} out of range for {n} qubits")
    k = np.arange(dim)
    return StateVector(n, np.exp(2j * np.pi * k * d / dim) / np.sqrt(dim))


def ref_dft_matrix(n: int) -> np.ndarray:
    """Dense forward Fourier matrix F[k, d] = 2**(-n/2) * e^{i*2*pi*k*d/2**n}."""
    _check_width(n)
    dim = 1 << n
    k = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(k, k) / dim) / np.sqrt(dim)


def ref_array_update(values, addend: int, predicate: IndexPredicate,
                     data_qubits: int) -> tuple[int, ...]:
    """Classical semantics of the array update: modular add on selected
    indices, other entries untouched."""
    limit = 1 << data_qubits
    out = []
    for j, v in enumerate(values):
        if not 0 <= v < limit:
            raise ValueError(f"value {v!r} at index {j} out of range")
        out.append((v + addend) % limit if predicate.selects(j) else v)
    return tuple(out)


def ref_gate_matrix(gate: Gate, num_qubits: int) -> np.ndarray:
    """Dense 2**n x 2**n unitary of a single gate, built from scratch."""
    _check_width(num_qubits)
    if max(gate.qubits) >= num_qubits:
        raise ValueError(f"gate {gate!r} does not fit on {num_qubits} qubits")
    dim = 1 << num_qubits
    if isinstance(gate, (Hadamard, X)):
        small = _H2 if isinstance(gate, Hadamard) else _X2
        out = np.eye(1, dtype=np.complex128)
        for q in range(num_qubits - 1, -1, -1):
            out = np.kron(out, small if q == gate.target else _I2)
        return out
    if isinstance(gate, Phase):
        idx = np.arange(dim)
        selected = ((idx >> gate.target) & 1) == 1
        for c in gate.controls:
            selected &= ((idx >> c.qubit) & 1) == (1 if c.positive else 0)
        factor = np.exp(2j * np.pi * gate.turn.value)
        return np.diag(np.where(selected, factor, 1.0 + 0.0j))
    if isinstance(gate, Swap):
        idx = np.arange(dim)
        bit_a = (idx >> gate.a) & 1
        bit_b = (idx >> gate.b) & 1
        swapped = idx & ~((1 << gate.a) | (1 << gate.b))
        swapped |= bit_b << gate.a
        swapped |= bit_a << gate.b
        out = np.zeros((dim, dim), dtype=np.complex128)
        out[swapped, idx] = 1.0
        return out
    raise ValueError(f"not a gate: {gate!r}")


def ref_circuit_matrix(circuit: Circuit) -> np.ndarray:
    """Dense unitary of a whole circuit by explicit matrix products."""
    _check_width(circuit.num_qubits)
    out = np.eye(1 << circuit.num_qubits, dtype=np.complex128)
    for gate in circuit.gates:
        out = ref_gate_matrix(gate, circuit.num_qubits) @ out
    return out
