"""Gate matrices, symbolic circuits, and correlated error operators.

A Circuit lists gates in application order (first element acts first on the
state), so realize([g1, ..., gm]) = G_m ... G_1 as a matrix product.  CNOT
runs compose into exact basis permutations; a Hadamard becomes an in-place
butterfly.  circuit_conjugate exploits this factored form so conjugating a
matrix by a realized circuit never needs a dense matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BadQubitCount, BadQubitIndex
from .kernels import parity_signs

_INV_SQRT2 = float(np.sqrt(0.5))

_PAULI = {
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


@dataclass(frozen=True)
class GateOp:
    kind: str  # "cnot" or "h"
    qubits: tuple[int, ...]  # (control, target) for cnot, (qubit,) for h


def cnot_op(control: int, target: int) -> GateOp:
    if control == target:
        raise BadQubitIndex(f"control and target coincide: {control}")
    return GateOp("cnot", (control, target))


def h_op(qubit: int) -> GateOp:
    return GateOp("h", (qubit,))


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    ops: tuple[GateOp, ...] = ()

    def __post_init__(self):
        if self.n_qubits < 1:
            raise BadQubitCount(f"n_qubits must be >= 1, got {self.n_qubits}")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if op.kind not in ("cnot", "h"):
                raise BadQubitIndex(f"unknown gate kind {op.kind!r}")
            for q in op.qubits:
                if not 0 <= q < self.n_qubits:
                    raise BadQubitIndex(
                        f"qubit {q} out of range for {self.n_qubits} qubits"
                    )

    def embed(self, n_qubits: int, offset: int) -> "Circuit":
        """The same gates re-homed on a larger register, indices shifted."""
        ops = tuple(
            GateOp(op.kind, tuple(q + offset for q in op.qubits)) for op in self.ops
        )
        return Circuit(n_qubits, ops)

    def count(self, kind: str) -> int:
        return sum(1 for op in self.ops if op.kind == kind)


def pauli(axis: str) -> np.ndarray:
    if axis not in _PAULI:
        raise ValueError(f"axis must be X, Y, or Z, got {axis!r}")
    return _PAULI[axis].copy()


def hadamard() -> np.ndarray:
    return _INV_SQRT2 * np.array([[1, 1], [1, -1]], dtype=np.complex128)


def cnot_perm(n: int, control: int, target: int) -> np.ndarray:
    """Basis permutation of C_{control,target}: flip target bit when control is 1."""
    if not (0 <= control < n and 0 <= target < n):
        raise BadQubitIndex(f"control={control}, target={target} out of range for n={n}")
    if control == target:
        raise BadQubitIndex(f"control and target coincide: {control}")
    s = np.arange(1 << n, dtype=np.int64)
    return s ^ (((s >> control) & 1) << target)


def permutation_matrix(perm) -> np.ndarray:
    perm = np.asarray(perm, dtype=np.int64)
    dim = perm.shape[0]
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[perm, np.arange(dim)] = 1.0
    return m


def cnot_matrix(n: int, control: int, target: int) -> np.ndarray:
    return permutation_matrix(cnot_perm(n, control, target))


_ERROR_CACHE: dict[tuple[str, int], np.ndarray] = {}


def correlated_error(axis: str, n: int) -> np.ndarray:
    """The n-fold Kronecker power of a Pauli matrix (X_n, Y_n, or Z_n).

    Built by direct index fill, which is exact and O(4**n); results are
    cached per (axis, n) and returned as read-only arrays.
    """
    if axis not in _PAULI:
        raise ValueError(f"axis must be X, Y, or Z, got {axis!r}")
    if n < 1:
        raise BadQubitCount(f"n must be >= 1, got {n}")
    key = (axis, n)
    cached = _ERROR_CACHE.get(key)
    if cached is not None:
        return cached
    dim = 1 << n
    idx = np.arange(dim)
    out = np.zeros((dim, dim), dtype=np.complex128)
    if axis == "Z":
        out[idx, idx] = parity_signs(n)
    elif axis == "X":
        out[idx, dim - 1 - idx] = 1.0
    else:
        out[idx, dim - 1 - idx] = ((-1j) ** n) * parity_signs(n)
    out.setflags(write=False)
    _ERROR_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# factored realization


def circuit_factors(circuit: Circuit) -> tuple:
    """Collapse a circuit to alternating permutation and Hadamard factors.

    Returns a tuple of ("perm", table) and ("h", qubit) entries in
    application order; consecutive CNOTs merge into one permutation table.
    """
    comp = None
    factors = []
    for op in circuit.ops:
        if op.kind == "cnot":
            p = cnot_perm(circuit.n_qubits, *op.qubits)
            comp = p if comp is None else p[comp]
        else:
            if comp is not None:
                factors.append(("perm", comp))
                comp = None
            factors.append(("h", op.qubits[0]))
    if comp is not None:
        factors.append(("perm", comp))
    return tuple(factors)


def circuit_permutation(circuit: Circuit) -> np.ndarray:
    """Basis permutation of a CNOT-only circuit; raises on other gates."""
    factors = circuit_factors(circuit)
    if len(factors) == 0:
        return np.arange(1 << circuit.n_qubits, dtype=np.int64)
    if len(factors) != 1 or factors[0][0] != "perm":
        raise BadQubitIndex("circuit contains non-CNOT gates")
    return factors[0][1]


def _hadamard_rows(m: np.ndarray, q: int) -> np.ndarray:
    out = m.copy()
    rows = out.reshape(-1, 2, (1 << q) * m.shape[0])
    a = rows[:, 0].copy()
    b = rows[:, 1]
    rows[:, 0] = (a + b) * _INV_SQRT2
    rows[:, 1] = (a - b) * _INV_SQRT2
    return out


def realize(circuit: Circuit) -> np.ndarray:
    """Dense matrix of the circuit: realize([g1, ..., gm]) = G_m ... G_1.

    Single-qubit gates embed per the global index convention (H on qubit q
    acts as I ox H ox I with 2**q trailing identity dimensions).
    """
    dim = 1 << circuit.n_qubits
    m = None
    for kind, arg in circuit_factors(circuit):
        if kind == "perm":
            m = permutation_matrix(arg) if m is None else m[np.argsort(arg), :]
        else:
            m = _hadamard_rows(np.eye(dim, dtype=np.complex128) if m is None else m, arg)
    if m is None:
        return np.eye(dim, dtype=np.complex128)
    return m


def invert(circuit: Circuit) -> Circuit:
    """Reverse the gate list; CNOT and H are self-inverse."""
    return Circuit(circuit.n_qubits, tuple(reversed(circuit.ops)))


def circuit_conjugate(factors_or_circuit, m: np.ndarray, adjoint: bool = False) -> np.ndarray:
    """Conjugate m by the realized circuit P without forming P.

    adjoint=False returns P m P_dag (encode direction); adjoint=True returns
    P_dag m P (decode direction).  Permutation factors are index gathers and
    Hadamard factors are butterflies, so CNOT-only circuits stay exact.
    """
    if isinstance(factors_or_circuit, Circuit):
        factors = circuit_factors(factors_or_circuit)
    else:
        factors = factors_or_circuit
    out = np.asarray(m, dtype=np.complex128)
    seq = reversed(factors) if adjoint else factors
    for kind, arg in seq:
        if kind == "perm":
            table = arg if adjoint else np.argsort(arg)
            out = kernels.gather_conjugate(out, table)
        else:
            out = kernels.hadamard_conjugate(out, arg)
    return out
