from __future__ import annotations

import numpy as np
import pytest

from corrqec import (
    AncillaSizeError,
    BadQubitCount,
    DimensionMismatch,
    PauliChannel,
    SpanChannel,
    apply_sequence,
    build_pn,
    classical_state,
    decode,
    encode,
    hybrid_sweep,
    kron,
    predicted_ancilla,
    random_density,
    run_trial,
)
from corrqec.scheme import induced_kraus

from oracles import circuit_matrix, plain_ops, span_kraus_dense, random_span_coeffs


def test_encode_decode_roundtrip():
    for n in [2, 3, 4, 5]:
        spec = build_pn(n)
        sigma = random_density(spec.ancilla_dim, n)
        rho = random_density((1 << n) // spec.ancilla_dim, n + 20)
        joint = kron(sigma, rho)
        encoded = encode(spec, sigma, rho)
        assert abs(np.trace(encoded) - 1) < 1e-12
        assert np.allclose(decode(spec, encoded), joint, atol=1e-13)


def test_encode_validation():
    spec = build_pn(3)
    with pytest.raises(AncillaSizeError):
        encode(spec, random_density(4, 0), random_density(2, 1))
    with pytest.raises(DimensionMismatch):
        encode(spec, random_density(2, 0), random_density(8, 1))
    with pytest.raises(DimensionMismatch):
        decode(spec, random_density(4, 2))


def test_predicted_ancilla_identity_channel():
    sigma = random_density(2, 3)
    assert np.allclose(
        predicted_ancilla(sigma, (1, 0, 0, 0), "odd", 1), sigma, atol=1e-15
    )


def test_predicted_ancilla_classical_even_is_fixed():
    for i in (0, 1):
        for j in (0, 1):
            sigma = classical_state(i, j)
            out = predicted_ancilla(sigma, (0.1, 0.2, 0.3, 0.4), "even", 2)
            assert np.allclose(out, sigma, atol=1e-15)


def test_predicted_ancilla_maximally_mixed_odd():
    sigma = np.eye(2, dtype=complex) / 2
    out = predicted_ancilla(sigma, (0.25, 0.25, 0.25, 0.25), "odd", 3)
    assert np.allclose(out, sigma, atol=1e-15)


def test_predicted_ancilla_sign_is_irrelevant():
    sigma = random_density(2, 4)
    probs = (0.4, 0.1, 0.3, 0.2)
    a = predicted_ancilla(sigma, probs, "odd", 1)
    b = predicted_ancilla(sigma, probs, "odd", 2)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_induced_kraus_matches_dense_conjugation(n):
    # P_dag F P must equal (induced ancilla operator) ox I, per Kraus operator
    spec = build_pn(n)
    p = circuit_matrix(plain_ops(spec.circuit), n)
    coeffs = random_span_coeffs(n, seed=n + 70, terms=2)
    ch = SpanChannel(n, coeffs)
    dense_ops = span_kraus_dense(n, coeffs)
    induced = induced_kraus(ch, spec.parity, spec.sign)
    rest = (1 << n) // spec.ancilla_dim
    for f, g in zip(dense_ops, induced):
        assert np.allclose(
            p.conj().T @ f @ p, np.kron(g, np.eye(rest)), atol=1e-12
        )


def test_run_trial_odd_random():
    sigma = random_density(2, 5)
    rho = random_density(4, 6)
    out = run_trial(3, sigma, rho, [PauliChannel(3, (0.4, 0.3, 0.2, 0.1))])
    assert out.rho_residual < 1e-12
    assert out.ancilla_residual < 1e-12
    assert out.product_residual < 1e-12
    assert out.hybrid_exact is None


def test_run_trial_even_classical():
    rho = random_density(4, 7)
    out = run_trial(4, classical_state(1, 0), rho, [PauliChannel(4, (0, 0, 1, 0))])
    assert out.hybrid_exact is True
    assert out.rho_residual < 1e-12
    assert out.ancilla_residual < 1e-12
    assert np.allclose(out.ancilla_out, classical_state(1, 0), atol=1e-12)


def test_run_trial_even_random_sigma_has_no_hybrid_flag():
    out = run_trial(
        4, random_density(4, 8), random_density(4, 9),
        [PauliChannel(4, (0.7, 0.1, 0.1, 0.1))],
    )
    assert out.hybrid_exact is None
    assert out.rho_residual < 1e-12


def test_run_trial_channel_corners_give_predicted_product():
    # decoded state must equal (predicted ancilla) ox rho for each pure error
    n = 5
    spec = build_pn(n)
    sigma = random_density(2, 10)
    rho = random_density(16, 11)
    for corner in [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]:
        ch = PauliChannel(n, corner)
        decoded = decode(spec, apply_sequence([ch], encode(spec, sigma, rho)))
        predicted = predicted_ancilla(sigma, corner, spec.parity, spec.k)
        assert np.allclose(decoded, np.kron(predicted, rho), atol=1e-11)


def test_run_trial_span_sequence():
    n = 5
    sigma = random_density(2, 12)
    rho = random_density(16, 13)
    channels = [SpanChannel(n, random_span_coeffs(n, seed=s, terms=2)) for s in (1, 2, 3)]
    out = run_trial(n, sigma, rho, channels, repeats=2)
    assert out.rho_residual < 1e-10
    assert out.product_residual < 1e-10
    assert out.ancilla_residual < 1e-10


def test_run_trial_span_sequence_even_classical_preserved():
    n = 4
    rho = random_density(4, 14)
    channels = [SpanChannel(n, random_span_coeffs(n, seed=s, terms=2)) for s in (4, 5, 6)]
    out = run_trial(n, classical_state(0, 1), rho, channels, repeats=2)
    assert out.rho_residual < 1e-10
    assert np.allclose(out.ancilla_out, classical_state(0, 1), atol=1e-10)
    assert out.hybrid_exact is True


def test_run_trial_single_channel_argument():
    ch = PauliChannel(3, (0.6, 0.2, 0.1, 0.1))
    a = run_trial(3, random_density(2, 15), random_density(4, 16), ch)
    b = run_trial(3, random_density(2, 15), random_density(4, 16), [ch])
    assert a.rho_residual == b.rho_residual


def test_degenerate_two_qubit_case():
    # n=2 carries no data qubits: rho is the trivial one-dimensional state
    rho = np.array([[1.0 + 0.0j]])
    out = run_trial(2, classical_state(1, 1), rho, [PauliChannel(2, (0.2, 0.3, 0.3, 0.2))])
    assert out.hybrid_exact is True
    assert out.ancilla_residual < 1e-12


@pytest.mark.parametrize("n", [2, 4, 6])
def test_hybrid_sweep(n):
    rho = random_density((1 << n) // 4, n + 40)
    outcomes = hybrid_sweep(n, rho, (0.3, 0.3, 0.2, 0.2))
    assert len(outcomes) == 4
    for out in outcomes:
        assert out.hybrid_exact is True
        assert out.rho_residual < 1e-12
        assert out.ancilla_residual < 1e-12


def test_hybrid_sweep_rejects_odd_n():
    with pytest.raises(BadQubitCount):
        hybrid_sweep(3, random_density(2, 1), (1, 0, 0, 0))


def test_classical_state_validation():
    with pytest.raises(ValueError):
        classical_state(2, 0)
    assert np.trace(classical_state(0, 1)) == 1.0
    assert classical_state(1, 0)[2, 2] == 1.0
