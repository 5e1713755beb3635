import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noisy_teleport.qmat import (
    check_density_matrix,
    embed_operator,
    herm_eigenvalues,
    herm_eigh,
    ket_to_dm,
    partial_trace,
    partial_transpose,
    permute_qubits,
    tensor,
)
from noisy_teleport.states import bell, pauli

from conftest import random_density_matrix

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_tensor_identity_and_bitflip():
    np.testing.assert_array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))
    ket00 = np.array([1, 0, 0, 0])
    np.testing.assert_array_equal(tensor(pauli(1), pauli(1)) @ ket00, [0, 0, 0, 1])


def test_tensor_block_structure(rng):
    a = rng.standard_normal((2, 2))
    b = rng.standard_normal((4, 4))
    m = tensor(a, b)
    assert m.shape == (8, 8)
    for i in range(2):
        for j in range(2):
            np.testing.assert_allclose(m[4 * i:4 * i + 4, 4 * j:4 * j + 4], a[i, j] * b)


def test_tensor_first_factor_is_most_significant():
    ket0, ket1 = np.array([1, 0]), np.array([0, 1])
    # |1>|0> is index 2 in big-endian order.
    assert np.argmax(tensor(ket1, ket0)) == 2


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_tensor_trace_multiplies(seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert abs(np.trace(tensor(a, b)) - np.trace(a) * np.trace(b)) < 1e-10


def test_partial_trace_of_bell_is_maximally_mixed():
    rho = ket_to_dm(bell(0))
    np.testing.assert_allclose(partial_trace(rho, [0]), np.eye(2) / 2, atol=1e-15)
    np.testing.assert_allclose(partial_trace(rho, [1]), np.eye(2) / 2, atol=1e-15)


def test_partial_trace_of_product(rng):
    ra = random_density_matrix(1, rng)
    rb = random_density_matrix(2, rng)
    np.testing.assert_allclose(partial_trace(tensor(ra, rb), [1, 2]), rb, atol=1e-14)
    np.testing.assert_allclose(partial_trace(tensor(ra, rb), [0]), ra, atol=1e-14)


def test_partial_trace_keeps_qubit_order(rng):
    rs = [random_density_matrix(1, rng) for _ in range(3)]
    rho = tensor(*rs)
    np.testing.assert_allclose(partial_trace(rho, [2, 0]), tensor(rs[0], rs[2]), atol=1e-14)


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 4))
def test_partial_trace_preserves_trace(seed, n):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(n, rng)
    keep = [i for i in range(n) if rng.random() < 0.5] or [0]
    assert abs(np.trace(partial_trace(rho, keep)) - 1) < 1e-10


@pytest.mark.parametrize("keep", [[], [2], [-1]])
def test_partial_trace_rejects_bad_keep(keep):
    rho = ket_to_dm(bell(0))
    with pytest.raises((ValueError, IndexError)):
        partial_trace(rho, keep)


def test_partial_transpose_bell_spectrum():
    ev = herm_eigenvalues(partial_transpose(ket_to_dm(bell(0)), [1]))
    np.testing.assert_allclose(ev, [-0.5, 0.5, 0.5, 0.5], atol=1e-14)


def test_partial_transpose_of_product_keeps_spectrum(rng):
    ra, rb = random_density_matrix(1, rng), random_density_matrix(1, rng)
    pt = partial_transpose(tensor(ra, rb), [1])
    np.testing.assert_allclose(pt, tensor(ra, rb.T), atol=1e-15)
    np.testing.assert_allclose(herm_eigenvalues(pt), herm_eigenvalues(tensor(ra, rb)), atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 4))
def test_partial_transpose_involution_trace_hermiticity(seed, n):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(n, rng)
    sub = [i for i in range(n) if rng.random() < 0.5]
    pt = partial_transpose(rho, sub)
    np.testing.assert_allclose(partial_transpose(pt, sub), rho, atol=1e-15)
    assert abs(np.trace(pt) - 1) < 1e-10
    assert np.max(np.abs(pt - pt.conj().T)) < 1e-10


def test_partial_transpose_rejects_out_of_range():
    with pytest.raises(IndexError):
        partial_transpose(np.eye(4) / 4, [2])


def test_herm_eigenvalues_examples():
    np.testing.assert_allclose(herm_eigenvalues(np.eye(4)), [1, 1, 1, 1])
    np.testing.assert_allclose(herm_eigenvalues(pauli(3)), [-1, 1])
    np.testing.assert_allclose(herm_eigenvalues(ket_to_dm(bell(0))), [0, 0, 0, 1], atol=1e-15)


def test_herm_eigenvalues_rejects_non_hermitian():
    with pytest.raises(ValueError):
        herm_eigenvalues(np.array([[0, 1], [0, 0]]))


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 4))
def test_eigen_trace_and_residual(seed, n):
    rng = np.random.default_rng(seed)
    d = 2**n
    h = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = h + h.conj().T
    w, v = herm_eigh(h)
    assert np.all(np.diff(w) >= 0)
    assert abs(w.sum() - np.trace(h).real) < 1e-9
    assert np.max(np.linalg.norm(h @ v - v * w, axis=0)) < 1e-8


def test_embed_and_permute(rng):
    u = pauli(1)
    full = embed_operator(u, [2], 3)
    np.testing.assert_allclose(full, tensor(np.eye(4), u))
    a, b = random_density_matrix(1, rng), random_density_matrix(1, rng)
    np.testing.assert_allclose(permute_qubits(tensor(a, b), [1, 0]), tensor(b, a), atol=1e-15)
    op = rng.standard_normal((4, 4))
    # op on qubits (2, 0) means its first factor sits on qubit 2.
    direct = permute_qubits(tensor(op, np.eye(2)), [1, 2, 0])
    np.testing.assert_allclose(embed_operator(op, [2, 0], 3), direct)


def test_check_density_matrix():
    check_density_matrix(np.eye(2) / 2)
    with pytest.raises(ValueError):
        check_density_matrix(np.eye(2))
    with pytest.raises(ValueError):
        check_density_matrix(np.diag([1.5, -0.5]))
