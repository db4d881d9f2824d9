"""Shared test utilities."""

import numpy as np

from qabacus import Circuit, Control, Gate, Hadamard, Phase, StateVector, Swap, X
from qabacus.turns import DyadicTurn, Turn


def random_state(n: int, rng: np.random.Generator) -> StateVector:
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    v /= np.linalg.norm(v)
    return StateVector(n, v)


def max_amp_diff(a: StateVector, b: StateVector) -> float:
    return float(np.max(np.abs(a.amplitudes - b.amplitudes)))


def random_gate(num_qubits: int, rng: np.random.Generator) -> Gate:
    kinds = ["h", "x", "p"] + (["swap"] if num_qubits >= 2 else [])
    kind = kinds[rng.integers(len(kinds))]
    if kind == "h":
        return Hadamard(int(rng.integers(num_qubits)))
    if kind == "x":
        return X(int(rng.integers(num_qubits)))
    if kind == "swap":
        a, b = rng.choice(num_qubits, size=2, replace=False)
        return Swap(int(a), int(b))
    target = int(rng.integers(num_qubits))
    others = [q for q in range(num_qubits) if q != target]
    rng.shuffle(others)
    n_ctrl = int(rng.integers(0, len(others) + 1)) if others else 0
    controls = tuple(Control(q, positive=bool(rng.integers(2)))
                     for q in others[:n_ctrl])
    if rng.integers(2):
        turn: Turn = DyadicTurn(int(rng.integers(256)), 8)
    else:
        turn = Turn(float(rng.random()))
    return Phase(turn, target, controls)


def random_circuit(num_qubits: int, num_gates: int,
                   rng: np.random.Generator) -> Circuit:
    return Circuit(num_qubits,
                   tuple(random_gate(num_qubits, rng) for _ in range(num_gates)))
