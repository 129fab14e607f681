import numpy as np
import pytest
from numpy.testing import assert_allclose

from qdist import linalg
from qdist.errors import DimensionMismatch, NotHermitian, NotPSD
from qdist.linalg import PAULI_X, PAULI_Z, hermitian_eig, kron, mat_sqrt_psd, partial_trace_aux
from qdist.states import random_density

I2 = np.eye(2)


def random_hermitian(d, rng):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return g + g.conj().T


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
@pytest.mark.parametrize("m, expected", [
    (np.diag([1.0, 0.0]), [1.0, 0.0]),
    (0.5 * (I2 + PAULI_X), [1.0, 0.0]),
    (0.5 * (I2 + 0.8 * PAULI_Z), [0.9, 0.1]),
])
def test_hermitian_eig_examples(m, expected, method):
    w, v = hermitian_eig(m, method=method)
    assert_allclose(w, expected, atol=1e-12)
    assert_allclose((v * w) @ v.conj().T, m, atol=1e-10)


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_eig_reconstruction_random(method, rng):
    for _ in range(200):
        d = int(rng.integers(2, 9))
        m = random_hermitian(d, rng)
        w, v = hermitian_eig(m, method=method)
        assert np.all(np.diff(w) <= 0)
        assert np.max(np.abs((v * w) @ v.conj().T - m)) <= 1e-9
        assert np.max(np.abs(v.conj().T @ v - np.eye(d))) <= 1e-10


def test_jacobi_agrees_with_lapack(rng):
    for _ in range(50):
        m = random_hermitian(int(rng.integers(2, 9)), rng)
        assert_allclose(hermitian_eig(m, "jacobi")[0], hermitian_eig(m)[0], atol=1e-10)


def test_jacobi_handles_degenerate_and_diagonal():
    w, _ = hermitian_eig(np.eye(4), "jacobi")
    assert_allclose(w, np.ones(4))
    w, _ = hermitian_eig(np.array([[2.0, 1.0], [1.0, 2.0]]), "jacobi")
    assert_allclose(w, [3.0, 1.0])


def test_not_hermitian_rejected():
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0, 1], [0, 0]]))


def test_kron_examples():
    assert_allclose(kron(I2, I2), np.eye(4))
    assert_allclose(kron(PAULI_Z, I2), np.diag([1, 1, -1, -1]))
    assert_allclose(kron(PAULI_X, PAULI_X), np.fliplr(np.eye(4)))


def test_partial_trace_bell_and_product(rng):
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert_allclose(partial_trace_aux(np.outer(bell, bell), 2, 2), I2 / 2)
    rho, tau = random_density(2, rng).mat, random_density(3, rng).mat
    assert_allclose(partial_trace_aux(np.kron(rho, 2.5 * tau), 2, 3), 2.5 * rho, atol=1e-14)


def test_partial_trace_preserves_trace(rng):
    for _ in range(100):
        d, da = rng.integers(2, 5, size=2)
        m = random_hermitian(d * da, rng)
        out = partial_trace_aux(m, d, da)
        assert abs(np.trace(out) - np.trace(m)) <= 1e-12 * max(1.0, abs(np.trace(m)))


def test_partial_trace_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        partial_trace_aux(np.eye(6), 2, 2)


def test_mat_sqrt_examples():
    assert_allclose(mat_sqrt_psd(I2 / 4), I2 / 2, atol=1e-15)
    assert_allclose(mat_sqrt_psd(np.diag([0.25, 0.0])), np.diag([0.5, 0.0]), atol=1e-15)
    assert_allclose(mat_sqrt_psd(0.5 * (I2 + 0.8 * PAULI_Z)),
                    np.diag([np.sqrt(0.9), np.sqrt(0.1)]), atol=1e-15)


def test_mat_sqrt_squares_back(rng):
    for _ in range(1000):
        m = random_density(int(rng.integers(2, 9)), rng).mat
        s = mat_sqrt_psd(m)
        assert np.max(np.abs(s @ s - m)) <= 1e-9
        assert np.max(np.abs(s - s.conj().T)) <= 1e-12


def test_mat_sqrt_rejects_negative():
    with pytest.raises(NotPSD):
        mat_sqrt_psd(np.diag([1.0, -1e-6]))
    mat_sqrt_psd(np.diag([1.0, -1e-12]))


def test_svd_real3(rng):
    u, s, v = linalg.svd_real3(np.diag([3.0, 2.0, 1.0]))
    assert_allclose(s, [3, 2, 1])
    _, s, _ = linalg.svd_real3(linalg.rot_z(0.3))
    assert_allclose(s, np.ones(3), atol=1e-15)
    u, s, v = linalg.svd_real3(np.eye(3))
    assert_allclose(u @ np.diag(s) @ v.T, np.eye(3), atol=1e-15)
    for _ in range(1000):
        m = rng.standard_normal((3, 3))
        u, s, v = linalg.svd_real3(m)
        assert np.max(np.abs(u @ np.diag(s) @ v.T - m)) <= 1e-10
        assert np.all(np.diff(s) <= 0)
