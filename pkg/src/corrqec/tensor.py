"""Dense complex linear algebra substrate.

Index convention, fixed package-wide: the basis vector |q_{n-1} ... q_1 q_0>
maps to the integer index sum_r q_r * 2**r, so qubit 0 is the least
significant bit.  In kron(a, b), `a` acts on the higher-significance qubits.
Matrices are dense row-major complex128 numpy arrays.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DimensionMismatch


def as_square(m) -> np.ndarray:
    """Coerce to a square complex128 matrix or raise DimensionMismatch."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    return np.kron(as_square(a), as_square(b))


def dagger(a) -> np.ndarray:
    return np.ascontiguousarray(as_square(a).conj().T)


def matmul(a, b) -> np.ndarray:
    a = as_square(a)
    b = as_square(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"matmul on shapes {a.shape} and {b.shape}")
    return a @ b


def partial_trace_leading(t, d_lead: int) -> np.ndarray:
    """Trace out the leading d_lead-dimensional factor of t."""
    t = as_square(t)
    dim = t.shape[0]
    if d_lead < 1 or dim % d_lead != 0:
        raise DimensionMismatch(f"d_lead={d_lead} does not divide dim={dim}")
    return kernels.ptrace_leading(t, dim // d_lead)


def partial_trace_trailing(t, d_trail: int) -> np.ndarray:
    """Trace out the trailing d_trail-dimensional factor of t."""
    t = as_square(t)
    dim = t.shape[0]
    if d_trail < 1 or dim % d_trail != 0:
        raise DimensionMismatch(f"d_trail={d_trail} does not divide dim={dim}")
    return kernels.ptrace_trailing(t, dim // d_trail)


def frobenius_distance(a, b) -> float:
    a = as_square(a)
    b = as_square(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"distance on shapes {a.shape} and {b.shape}")
    return kernels.frob_dist(a, b)


def random_density(dim: int, seed: int) -> np.ndarray:
    """G G_dag / tr(G G_dag) for G with entries uniform in the unit square.

    Deterministic per seed (PCG64); satisfies trace 1, Hermitian, PSD.
    """
    if dim < 1:
        raise DimensionMismatch(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    g = rng.random((dim, dim)) + 1j * rng.random((dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def is_density_matrix(
    m,
    herm_tol: float = 1e-12,
    trace_tol: float = 1e-12,
    eig_floor: float = -1e-10,
) -> bool:
    """Check Hermiticity, unit trace, and PSD within the given tolerances."""
    m = as_square(m)
    if np.linalg.norm(m - m.conj().T) > herm_tol:
        return False
    if abs(np.trace(m) - 1.0) > trace_tol:
        return False
    return float(np.linalg.eigvalsh(m).min()) >= eig_floor
