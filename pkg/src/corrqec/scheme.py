"""Encode, corrupt, decode, and verify the recovered product state.

Encoding maps sigma ox rho to P_n (sigma ox rho) P_n_dag, where sigma is a
one-qubit ancilla for odd n and a two-qubit ancilla for even n.  Correlated
errors commute through P_n onto the ancilla alone, so decoding with P_n_dag
leaves an exact product: the predicted ancilla times the untouched data rho.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .channels import Channel, PauliChannel, SpanChannel, apply_sequence
from .encoder import EncoderSpec, build_pn, d_matrix, encoder_factors
from .errors import AncillaSizeError, BadQubitCount, DimensionMismatch
from .gates import circuit_conjugate, pauli
from .tensor import frobenius_distance, partial_trace_leading, partial_trace_trailing

HYBRID_TOL = 1e-11


@dataclass(eq=False)
class SchemeOutcome:
    recovered_rho: np.ndarray
    ancilla_out: np.ndarray
    predicted_ancilla: np.ndarray
    rho_residual: float
    ancilla_residual: float
    product_residual: float
    hybrid_exact: bool | None  # None when n is odd or the ancilla is not classical


def classical_state(i: int, j: int) -> np.ndarray:
    """The two-bit computational projector |ij><ij| (i is the higher bit)."""
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError(f"classical bits must be 0 or 1, got ({i}, {j})")
    out = np.zeros((4, 4), dtype=np.complex128)
    out[2 * i + j, 2 * i + j] = 1.0
    return out


def _check_states(spec: EncoderSpec, sigma: np.ndarray, rho: np.ndarray):
    sigma = np.asarray(sigma, dtype=np.complex128)
    rho = np.asarray(rho, dtype=np.complex128)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise AncillaSizeError(f"ancilla must be square, got shape {sigma.shape}")
    if sigma.shape[0] != spec.ancilla_dim:
        raise AncillaSizeError(
            f"{spec.parity} n={spec.n} needs a {spec.ancilla_dim}-dimensional "
            f"ancilla, got {sigma.shape[0]}"
        )
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatch(f"data state must be square, got shape {rho.shape}")
    if sigma.shape[0] * rho.shape[0] != (1 << spec.n):
        raise DimensionMismatch(
            f"ancilla dim {sigma.shape[0]} times data dim {rho.shape[0]} "
            f"must be 2**{spec.n}"
        )
    return sigma, rho


def encode(spec: EncoderSpec, sigma: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """P_n (sigma ox rho) P_n_dag."""
    sigma, rho = _check_states(spec, sigma, rho)
    return circuit_conjugate(encoder_factors(spec.n), np.kron(sigma, rho))


def decode(spec: EncoderSpec, tau: np.ndarray) -> np.ndarray:
    """P_n_dag tau P_n."""
    tau = np.asarray(tau, dtype=np.complex128)
    if tau.ndim != 2 or tau.shape != (1 << spec.n, 1 << spec.n):
        raise DimensionMismatch(f"expected a {1 << spec.n}-dim state, got {tau.shape}")
    return circuit_conjugate(encoder_factors(spec.n), tau, adjoint=True)


def _induced_basis(parity: str, sign: int):
    """Images of I, X_n, Y_n, Z_n on the ancilla after conjugation by P_n."""
    if parity == "odd":
        return (
            np.eye(2, dtype=np.complex128),
            pauli("X"),
            sign * pauli("Y"),
            pauli("Z"),
        )
    return (
        np.eye(4, dtype=np.complex128),
        d_matrix("X"),
        sign * d_matrix("Y"),
        d_matrix("Z"),
    )


def induced_kraus(ch: Channel, parity: str, sign: int) -> list[np.ndarray]:
    """The ancilla-side Kraus operators a channel induces through the encoder.

    The sign on the Y image cancels for a PauliChannel (it conjugates each
    term separately) but matters inside a span operator's cross terms.
    """
    basis = _induced_basis(parity, sign)
    if isinstance(ch, PauliChannel):
        return [sqrt(p) * op for p, op in zip(ch.probs, basis) if p > 0.0]
    return [
        sum(coef * op for coef, op in zip(coeffs, basis))
        for coeffs in ch.kraus_coeffs
    ]


def predicted_ancilla(sigma: np.ndarray, probs, parity: str, k: int) -> np.ndarray:
    """Ancilla output for a single Pauli channel.

    Odd parity: p0 s + p1 X s X + p2 Y s Y + p3 Z s Z on one qubit; even
    parity: the same with the diagonal D images on two qubits.  The (-1)**k
    sign cancels in conjugation, so k does not change the value.
    """
    sigma = np.asarray(sigma, dtype=np.complex128)
    expected = 2 if parity == "odd" else 4
    if sigma.shape != (expected, expected):
        raise DimensionMismatch(
            f"{parity} ancilla must be {expected}x{expected}, got {sigma.shape}"
        )
    basis = _induced_basis(parity, (-1) ** k)
    out = np.zeros_like(sigma)
    for p, op in zip(probs, basis):
        out += p * (op @ sigma @ op.conj().T)
    return out


def _predict_sequence(
    sigma: np.ndarray, channels, repeats: int, parity: str, sign: int
) -> np.ndarray:
    out = np.asarray(sigma, dtype=np.complex128)
    kraus_per_channel = [induced_kraus(ch, parity, sign) for ch in channels]
    for _ in range(repeats):
        for kraus in kraus_per_channel:
            out = sum(g @ out @ g.conj().T for g in kraus)
    return out


def _is_classical(sigma: np.ndarray) -> bool:
    if sigma.shape != (4, 4):
        return False
    for idx in range(4):
        proj = np.zeros((4, 4), dtype=np.complex128)
        proj[idx, idx] = 1.0
        if frobenius_distance(sigma, proj) <= 1e-12:
            return True
    return False


def run_trial(
    n: int, sigma: np.ndarray, rho: np.ndarray, channels, repeats: int = 1
) -> SchemeOutcome:
    """Full pipeline: encode, apply the channel sequence, decode, compare.

    The decoded state is predicted to be (induced channel on sigma) ox rho;
    the outcome reports the Frobenius residuals of that prediction and of
    the product factorization itself.
    """
    if isinstance(channels, (PauliChannel, SpanChannel)):
        channels = [channels]
    channels = list(channels)
    spec = build_pn(n)
    sigma, rho = _check_states(spec, sigma, rho)

    encoded = encode(spec, sigma, rho)
    corrupted = apply_sequence(channels, encoded, repeats)
    decoded = decode(spec, corrupted)

    recovered_rho = partial_trace_leading(decoded, sigma.shape[0])
    ancilla_out = partial_trace_trailing(decoded, rho.shape[0])
    predicted = _predict_sequence(sigma, channels, repeats, spec.parity, spec.sign)

    rho_residual = frobenius_distance(recovered_rho, rho)
    ancilla_residual = frobenius_distance(ancilla_out, predicted)
    product_residual = frobenius_distance(
        decoded, np.kron(ancilla_out, recovered_rho)
    )
    hybrid_exact = None
    if spec.parity == "even" and _is_classical(sigma):
        hybrid_exact = (
            frobenius_distance(decoded, np.kron(sigma, rho)) <= HYBRID_TOL
        )
    return SchemeOutcome(
        recovered_rho=recovered_rho,
        ancilla_out=ancilla_out,
        predicted_ancilla=predicted,
        rho_residual=rho_residual,
        ancilla_residual=ancilla_residual,
        product_residual=product_residual,
        hybrid_exact=hybrid_exact,
    )


def hybrid_sweep(n: int, rho: np.ndarray, probs) -> list[SchemeOutcome]:
    """run_trial for all four classical ancillas |ij><ij| on even n."""
    if n < 2 or n % 2 != 0:
        raise BadQubitCount(f"hybrid sweep needs even n >= 2, got {n}")
    channel = PauliChannel(n, tuple(probs))
    return [
        run_trial(n, classical_state(i, j), rho, [channel])
        for i in (0, 1)
        for j in (0, 1)
    ]
