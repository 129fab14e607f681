"""Small dense linear-algebra kernel.

Everything here works on plain ``numpy`` arrays. Dimensions in this package
never exceed a few tens, so clarity wins over speed.
"""
import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian, NotPSD

EPS_LIN = 1e-10
EPS_PSD = 1e-10
HERMITIAN_TOL = 1e-9

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


def dagger(m):
    return np.conjugate(np.transpose(m))


def check_hermitian(m, tol=HERMITIAN_TOL):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    dev = np.max(np.abs(m - dagger(m))) if m.size else 0.0
    if dev > tol:
        raise NotHermitian(f"matrix is not Hermitian: max |m - m^H| = {dev:.3e}")
    return m


def jacobi_eigh(m, tol=1e-14, max_sweeps=60):
    """Cyclic Jacobi eigensolver for a Hermitian matrix.

    Each rotation first removes the phase of the pivot element and then
    applies the classic real Jacobi rotation to the 2x2 block.

    Returns:
        (eigenvalues ascending-unsorted, eigenvectors as columns).

    Raises:
        NoConvergence: if the off-diagonal mass does not vanish within
            ``max_sweeps`` full sweeps.
    """
    a = np.array(m, dtype=complex)
    a = 0.5 * (a + dagger(a))
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(np.linalg.norm(a), 1e-300)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            return np.real(np.diag(a)).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                # g = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = dagger(g) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ g
    raise NoConvergence(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")


def hermitian_eig(m, method="lapack"):
    """Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.

    Args:
        m: square matrix with ``max|m - m^H| <= 1e-9``.
        method: ``"lapack"`` (``numpy.linalg.eigh``) or ``"jacobi"``.

    Returns:
        ``(w, v)`` with real ``w`` descending and ``v[:, i]`` the eigenvector
        of ``w[i]``.
    """
    m = check_hermitian(m)
    if method == "lapack":
        try:
            w, v = np.linalg.eigh(0.5 * (m + dagger(m)))
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(str(exc)) from exc
    elif method == "jacobi":
        w, v = jacobi_eigh(m)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    order = np.argsort(w)[::-1]
    return w[order], v[:, order]


def eigvalsh_desc(m):
    m = check_hermitian(m)
    return np.linalg.eigvalsh(0.5 * (m + dagger(m)))[::-1]


def kron(a, b):
    return np.kron(a, b)


def partial_trace_aux(m, d, d_aux):
    """Trace out the second (auxiliary) tensor factor of an operator on C^d x C^d_aux."""
    m = np.asarray(m)
    if m.shape != (d * d_aux, d * d_aux):
        raise DimensionMismatch(
            f"operator of shape {m.shape} is not on a {d}x{d_aux} product space")
    return np.einsum("ikjk->ij", m.reshape(d, d_aux, d, d_aux))


def partial_trace_sys(m, d, d_aux):
    """Trace out the first (system) tensor factor."""
    m = np.asarray(m)
    if m.shape != (d * d_aux, d * d_aux):
        raise DimensionMismatch(
            f"operator of shape {m.shape} is not on a {d}x{d_aux} product space")
    return np.einsum("kikj->ij", m.reshape(d, d_aux, d, d_aux))


def mat_sqrt_psd(m, eps=EPS_PSD):
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-eps, 0)`` are treated as rounding noise and clamped.
    """
    w, v = hermitian_eig(m)
    if w.size and w[-1] < -eps:
        raise NotPSD(f"matrix has eigenvalue {w[-1]:.3e} < -{eps:g}")
    root = np.sqrt(np.clip(w, 0.0, None))
    out = (v * root) @ dagger(v)
    if np.isrealobj(m):
        out = out.real
    return out


def svd_real3(m):
    """SVD of a real 3x3 matrix: ``m = U @ diag(s) @ V.T`` with ``s`` descending."""
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise DimensionMismatch(f"expected 3x3, got {m.shape}")
    try:
        u, s, vt = np.linalg.svd(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return u, s, vt.T


def rot_z(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_y(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def euler_zyz(alpha, beta, gamma):
    return rot_z(alpha) @ rot_y(beta) @ rot_z(gamma)
