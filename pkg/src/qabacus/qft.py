"""Quantum Fourier transform builders and the analytic Fourier state.

Convention: the forward transform maps |d> to
``2**(-n/2) * sum_k exp(+i*2*pi*k*d/2**n) |k>``.  With the trailing
swap network enabled (the default), qubit ``l`` of the result carries
the binary-fraction phase ``fourier_phase(d, l, n) = (d mod 2**(n-l)) /
2**(n-l)`` turns, so a plain bit-ordered readout recovers ``d`` after
the inverse transform.
"""

import numpy as np

from . import statevector as sv
from .circuit import Circuit, Control, Gate, Hadamard, Phase, Swap, invert
from .statevector import StateVector
from .turns import DyadicTurn

__all__ = ["build_qft", "build_inverse_qft", "analytic_fourier_state"]


def _check_width(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= sv.MAX_QUBITS:
        raise ValueError(f"width must be in [1, {sv.MAX_QUBITS}], got {n!r}")


def build_qft(n: int, with_swaps: bool = True) -> Circuit:
    """Forward Fourier transform on n qubits.

    Exactly n Hadamards and n*(n-1)/2 controlled phase gates with turns
    1/2**k, plus floor(n/2) trailing swaps when with_swaps is set.
    """
    _check_width(n)
    gates: list[Gate] = []
    for t in range(n - 1, -1, -1):
        gates.append(Hadamard(t))
        for c in range(t - 1, -1, -1):
            gates.append(Phase(DyadicTurn(1, t - c + 1), t, (Control(c),)))
    if with_swaps:
        for i in range(n // 2):
            gates.append(Swap(i, n - 1 - i))
    return Circuit(n, tuple(gates))


def build_inverse_qft(n: int, with_swaps: bool = True) -> Circuit:
    """Inverse Fourier transform; maps analytic_fourier_state(d, n) back
    to |d> deterministically."""
    return invert(build_qft(n, with_swaps))


def analytic_fourier_state(d: int, n: int) -> StateVector:
    """The Fourier image of |d> built directly from its product form,
    without running any gates.  Serves as an independent target for the
    gate-level builders."""
    _check_width(n)
    if not isinstance(d, int) or not 0 <= d < (1 << n):
        raise ValueError(f"value {d!r} out of range for {n} qubits")
    idx = np.arange(1 << n)
    turns = np.zeros(1 << n)
    for b in range(n):
        width = n - b
        turn = (d % (1 << width)) / (1 << width)  # exact: dyadic
        turns = turns + ((idx >> b) & 1) * turn
    amps = np.exp(2j * np.pi * turns) * (2.0 ** (-n / 2.0))
    return StateVector(n, amps)
