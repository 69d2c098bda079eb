"""Recursive encoding circuits P_n and their error-conjugation identities.

P_2 = C01 (I ox H) C01 and P_3 = C10 C02 C21 are the bases.  Odd n = 2k+1
extends by P_n = (I_4 ox P_{n-2})(P_3 ox I), even n = 2k+2 by
P_n = (I_2 ox P_{n-1})(P_2 ox I).  Conjugating the correlated errors
X_n, Y_n, Z_n by P_n collapses them onto the ancilla qubits:

  odd:   (X ox I,  (-1)**k Y ox I,  Z ox I)
  even:  (D_X ox I,  (-1)**k D_Y ox I,  D_Z ox I)

with D_X = diag(1,-1,1,-1), D_Y = diag(-1,-1,1,1), D_Z = diag(1,-1,-1,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadQubitCount
from .gates import (
    Circuit,
    circuit_conjugate,
    circuit_factors,
    cnot_op,
    correlated_error,
    h_op,
    pauli,
)
from .tensor import frobenius_distance, kron

_D_DIAG = {
    "X": np.array([1, -1, 1, -1], dtype=np.complex128),
    "Y": np.array([-1, -1, 1, 1], dtype=np.complex128),
    "Z": np.array([1, -1, -1, 1], dtype=np.complex128),
}


def d_matrix(axis: str) -> np.ndarray:
    """The diagonal 4x4 image of a correlated error under even-n conjugation."""
    return np.diag(_D_DIAG[axis])


@dataclass(frozen=True)
class EncoderSpec:
    n: int
    parity: str  # "odd" for n = 2k+1, "even" for n = 2k+2
    k: int
    sign: int  # (-1)**k, the factor on the conjugated Y term
    circuit: Circuit

    @property
    def cnot_count(self) -> int:
        return self.circuit.count("cnot")

    @property
    def h_count(self) -> int:
        return self.circuit.count("h")

    @property
    def ancilla_dim(self) -> int:
        return 2 if self.parity == "odd" else 4


def build_p2() -> EncoderSpec:
    circuit = Circuit(2, (cnot_op(0, 1), h_op(0), cnot_op(0, 1)))
    return EncoderSpec(2, "even", 0, 1, circuit)


def build_p3() -> EncoderSpec:
    circuit = Circuit(3, (cnot_op(2, 1), cnot_op(0, 2), cnot_op(1, 0)))
    return EncoderSpec(3, "odd", 1, -1, circuit)


@lru_cache(maxsize=None)
def build_pn(n: int) -> EncoderSpec:
    """Encoder for any n >= 2; odd n has 3k CNOTs, even n has 3k+2 CNOTs + 1 H."""
    if n < 2:
        raise BadQubitCount(f"n must be >= 2, got {n}")
    if n == 2:
        return build_p2()
    if n == 3:
        return build_p3()
    if n % 2 == 1:
        head = build_p3().circuit.embed(n, n - 3)
        inner = build_pn(n - 2)
        k = (n - 1) // 2
        parity = "odd"
    else:
        head = build_p2().circuit.embed(n, n - 2)
        inner = build_pn(n - 1)
        k = (n - 2) // 2
        parity = "even"
    circuit = Circuit(n, head.ops + inner.circuit.ops)
    return EncoderSpec(n, parity, k, (-1) ** k, circuit)


@lru_cache(maxsize=None)
def encoder_factors(n: int) -> tuple:
    """Cached gather/butterfly factorization of build_pn(n).circuit."""
    return circuit_factors(build_pn(n).circuit)


def expected_conjugation(spec: EncoderSpec, axis: str) -> np.ndarray:
    """The predicted value of P_dag W P for W the correlated error on `axis`."""
    sign = spec.sign if axis == "Y" else 1
    if spec.parity == "odd":
        head = sign * pauli(axis)
        rest = 1 << (spec.n - 1)
    else:
        head = sign * d_matrix(axis)
        rest = 1 << (spec.n - 2)
    return kron(head, np.eye(rest, dtype=np.complex128))


def conjugation_report(spec: EncoderSpec) -> tuple[float, float, float]:
    """Frobenius residuals of the three conjugation identities for spec.

    Odd-n circuits are pure permutations, so the X, Y, Z residuals are
    exactly 0.0; even-n circuits carry one Hadamard and stay below 1e-12.
    """
    factors = encoder_factors(spec.n)
    residuals = []
    for axis in "XYZ":
        conj = circuit_conjugate(factors, correlated_error(axis, spec.n), adjoint=True)
        residuals.append(frobenius_distance(conj, expected_conjugation(spec, axis)))
    return tuple(residuals)
