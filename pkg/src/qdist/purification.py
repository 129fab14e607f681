"""Purifications, the one-qubit (r, A) parametrization and D_N by minimization.

A one-qubit state with Bloch vector ``r`` is purified on C^2 x C^2 by

    P = (I4 + sum_i r_i s_i x I + sum_i g_i I x s_i + sum_ij A_ij s_i x s_j) / 4,

with ``g = A^T r`` and a real 3x3 ``A`` obeying

    A A^T = (1 - |r|^2) I3 + r r^T,     det A = |r|^2 - 1.

Every other purification is obtained as ``A -> A S`` with ``S`` in SO(3), which
is the action of a unitary on the auxiliary qubit.
"""
import logging
import warnings
from dataclasses import dataclass

import numpy as np

from .distances import DistanceReport, Method
from .entropy import EPS_ENT, von_neumann
from .errors import (ConsistencyFailure, DegenerateInput, DegenerateInputWarning,
                     DimensionMismatch, NotSamePurified, PurityViolation, ValidationFailure)
from .linalg import PAULIS, dagger, hermitian_eig, partial_trace_aux, svd_real3
from .states import BlochVector, PureState, as_matrix, as_vector, from_bloch, to_bloch

log = logging.getLogger(__name__)

REFLECT = np.diag([1.0, 1.0, -1.0])
_I2 = np.eye(2, dtype=complex)
_SIG_I = [np.kron(s, _I2) for s in PAULIS]
_I_SIG = [np.kron(_I2, s) for s in PAULIS]
_SIG_SIG = [[np.kron(a, b) for b in PAULIS] for a in PAULIS]

# RHS forms for A A^T. "consistent" is tried first; "printed" is kept because it
# is the other candidate and coincides with "consistent" at |r| in {0, 1}.
A_SYSTEM_FORMS = ("consistent", "printed")


@dataclass(frozen=True)
class Rotation3:
    S: np.ndarray

    def __post_init__(self):
        s = np.array(self.S, dtype=float)
        if s.shape != (3, 3):
            raise DimensionMismatch(f"rotation must be 3x3, got {s.shape}")
        if np.max(np.abs(s.T @ s - np.eye(3))) > 1e-10:
            raise ValueError("matrix is not orthogonal")
        if abs(np.linalg.det(s) - 1.0) > 1e-10:
            raise ValueError("rotation must have determinant +1")
        object.__setattr__(self, "S", s)

    def __array__(self, dtype=None, copy=None):
        return self.S if dtype is None else self.S.astype(dtype)


@dataclass(frozen=True)
class QubitPurification:
    r: BlochVector
    A: np.ndarray
    gamma: np.ndarray
    P: np.ndarray

    @property
    def rho(self):
        return from_bloch(self.r)

    def vector(self):
        """A unit vector |psi> with P = |psi><psi| (global phase fixed arbitrarily)."""
        return purification_vector(self.P)


# ---------------------------------------------------------------- general d

def spectral_purify(rho):
    """Purify ``rho`` as sum_i sqrt(p_i) |e_i> x |i> on C^d x C^d."""
    m = as_matrix(rho)
    d = m.shape[0]
    w, v = hermitian_eig(m)
    w = np.where(w > EPS_ENT, w, 0.0)
    psi = np.zeros(d * d, dtype=complex)
    for i in range(d):
        aux = np.zeros(d)
        aux[i] = 1.0
        psi += np.sqrt(w[i]) * np.kron(v[:, i], aux)
    return PureState(psi / np.linalg.norm(psi))


def reduced_state(psi, d, d_aux=None):
    v = as_vector(psi)
    d_aux = v.size // d if d_aux is None else d_aux
    return partial_trace_aux(np.outer(v, np.conj(v)), d, d_aux)


def aux_unitary_between(psi1, psi2, d):
    """Unitary U on the auxiliary factor with (I x U)|psi2> = |psi1>.

    Both vectors are reshaped to d x d_aux coefficient matrices ``X`` and
    polar-decomposed as ``X = sqrt(rho) W``; then ``U = (W2^H W1)^T``.
    Requires a full-rank common reduced state.
    """
    a, b = as_vector(psi1), as_vector(psi2)
    if a.shape != b.shape or a.size % d:
        raise DimensionMismatch("purifications live in different spaces")
    d_aux = a.size // d
    rho1 = reduced_state(a, d, d_aux)
    rho2 = reduced_state(b, d, d_aux)
    if np.max(np.abs(rho1 - rho2)) > 1e-8:
        raise NotSamePurified("the two vectors purify different states")
    w, v = hermitian_eig(rho1)
    if w[-1] <= 1e-12:
        raise NotSamePurified("reduced state is rank deficient; the auxiliary unitary is not unique")
    inv_sqrt = (v / np.sqrt(w)) @ dagger(v)
    w1 = inv_sqrt @ a.reshape(d, d_aux)
    w2 = inv_sqrt @ b.reshape(d, d_aux)
    return (dagger(w2) @ w1).T


def unitary_freedom_check(psi1, psi2, d=None):
    """Residual ||psi1 - (I x U) psi2|| for the auxiliary unitary U linking them."""
    a, b = as_vector(psi1), as_vector(psi2)
    if d is None:
        d = int(round(np.sqrt(a.size)))
    u = aux_unitary_between(a, b, d)
    d_aux = a.size // d
    mapped = np.kron(np.eye(d), u) @ b
    return float(np.linalg.norm(a - mapped))


def purification_vector(P):
    w, v = hermitian_eig(P)
    vec = v[:, 0]
    k = np.argmax(np.abs(vec))
    vec = vec * (abs(vec[k]) / vec[k])
    return PureState(vec / np.linalg.norm(vec))


# ---------------------------------------------------------------- qubit (r, A)

def _rhs_coeffs(r, form):
    # RHS = a I + n^2 rhat rhat^T
    n = float(np.linalg.norm(r))
    if form == "consistent":
        return 1.0 - n * n, n
    if form == "printed":
        return 1.0 - n, n
    raise ValueError(f"unknown A-system form {form!r}")


def a_system_rhs(r, form="consistent"):
    """Right-hand side of the A A^T equation for Bloch vector ``r``."""
    r = np.asarray(r, dtype=float)
    a, _ = _rhs_coeffs(r, form)
    return a * np.eye(3) + np.outer(r, r)


def sqrt_rhs(r, form="consistent"):
    """Principal square root of :func:`a_system_rhs`, from its two eigenspaces.

    The eigenvalues are ``a`` (twice, orthogonal to r) and ``a + |r|^2``
    (along r). Doing this in closed form avoids sqrt-amplified rounding when
    ``a`` is 0, i.e. for pure states.
    """
    r = np.asarray(r, dtype=float)
    a, n = _rhs_coeffs(r, form)
    if a < -1e-15 or a + n * n < -1e-15:
        raise ValueError("A-system right-hand side is not positive semidefinite")
    a = max(a, 0.0)
    if n == 0.0:
        return np.sqrt(a) * np.eye(3)
    proj = np.outer(r, r) / (n * n)
    return np.sqrt(a) * (np.eye(3) - proj) + np.sqrt(a + n * n) * proj


def assemble_operator(r, A):
    """Raw 4x4 operator for (r, A) without any validation.

    Affine in ``A`` (the auxiliary Bloch vector A^T r is linear in A), which
    the brute-force oracles rely on.
    """
    r = np.asarray(r, dtype=float)
    A = np.asarray(A, dtype=float)
    gamma = A.T @ r
    P = np.eye(4, dtype=complex)
    for i in range(3):
        P = P + r[i] * _SIG_I[i] + gamma[i] * _I_SIG[i]
        for j in range(3):
            P = P + A[i, j] * _SIG_SIG[i][j]
    return P / 4.0


def purification_residuals(r, P):
    """Worst violations of (trace one, idempotence, partial trace = rho(r))."""
    rho = 0.5 * (np.eye(2) + sum(ri * s for ri, s in zip(r, PAULIS)))
    return (abs(np.trace(P).real - 1.0),
            float(np.max(np.abs(P @ P - P))),
            float(np.max(np.abs(partial_trace_aux(P, 2, 2) - rho))))


def _passes(r, P, tol_trace=1e-9, tol_purity=1e-8, tol_reduced=1e-9):
    t, pur, red = purification_residuals(r, P)
    return t <= tol_trace and pur <= tol_purity and red <= tol_reduced


def assemble_qubit_purification(r, A, validate=True):
    """Build the purification operator for Bloch vector ``r`` and matrix ``A``.

    Raises:
        PurityViolation: if the result is not a unit-trace rank-one projector
            reducing to rho(r); ``A`` was then not a valid solution.
    """
    if not isinstance(r, BlochVector):
        r = BlochVector(r)
    A = np.asarray(A, dtype=float)
    P = assemble_operator(r.r, A)
    if validate:
        t, pur, red = purification_residuals(r.r, P)
        if t > 1e-9 or pur > 1e-8 or red > 1e-9:
            raise PurityViolation(
                f"(r, A) does not define a purification: |Tr P - 1| = {t:.2e}, "
                f"max|P^2 - P| = {pur:.2e}, max|Tr_aux P - rho| = {red:.2e}")
    return QubitPurification(r, A, A.T @ r.r, P)


def solve_A_system(r, return_form=False):
    """Particular solution of the A-system: principal sqrt of the Gram target times diag(1, 1, -1).

    Candidate right-hand sides are tried in order and the first whose
    assembled operator is a valid purification is returned.

    Raises:
        ValidationFailure: if no candidate yields a purification.
    """
    if not isinstance(r, BlochVector):
        r = BlochVector(r)
    for form in A_SYSTEM_FORMS:
        try:
            A = sqrt_rhs(r.r, form) @ REFLECT
        except ValueError:
            log.debug("A-system form %r has no real square root at r=%s", form, r.r)
            continue
        if _passes(r.r, assemble_operator(r.r, A)):
            if form != A_SYSTEM_FORMS[0]:
                log.info("A-system form %r adopted at r=%s", form, r.r)
            return (A, form) if return_form else A
        log.debug("A-system form %r rejected at r=%s", form, r.r)
    raise ValidationFailure(f"no A-system form yields a purification for r = {r.r}")


def ap_update(A, r, p, tol=1e-9):
    """Gram matrix and determinant for the depolarized Bloch vector (1 - p) r.

    Returns ``(A A^T + f Omega, det A - f |r|^2)`` with ``f = 1 - (1 - p)^2`` and
    ``Omega = |r|^2 I - r r^T``, after checking both against the solution of the
    A-system at ``(1 - p) r``.

    Raises:
        ConsistencyFailure: naming the quantity that disagrees.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    A = np.asarray(A, dtype=float)
    r = np.asarray(getattr(r, "r", r), dtype=float)
    n2 = float(r @ r)
    f = 1.0 - (1.0 - p) ** 2
    omega = n2 * np.eye(3) - np.outer(r, r)
    gram = A @ A.T + f * omega
    det = float(np.linalg.det(A)) - f * n2
    Ap = solve_A_system((1.0 - p) * r)
    gram_err = float(np.max(np.abs(Ap @ Ap.T - gram)))
    det_err = abs(float(np.linalg.det(Ap)) - det)
    if gram_err > tol:
        raise ConsistencyFailure(
            f"Gram update disagrees with the A-system at (1-p)r by {gram_err:.2e}")
    if det_err > tol:
        raise ConsistencyFailure(
            f"determinant update disagrees with the A-system at (1-p)r by {det_err:.2e}")
    return gram, det


# ---------------------------------------------------------------- SO(3) search

def procrustes_so3(B, C, strict=False):
    """Rotation S in SO(3) minimizing ||B S - C||_HS.

    With ``B^T C = U diag(s) V^T`` the minimizer is
    ``U diag(1, 1, det(U V^T)) V^T``. When the determinant correction is
    active and the two smallest singular values coincide, the minimizer is not
    unique; this warns (or raises ``DegenerateInput`` if ``strict``) and
    returns the first SVD branch.
    """
    K = np.asarray(B, dtype=float).T @ np.asarray(C, dtype=float)
    u, s, v = svd_real3(K)
    sign = 1.0 if np.linalg.det(u @ v.T) >= 0 else -1.0
    if sign < 0 and abs(s[1] - s[2]) <= 1e-12:
        msg = "Procrustes minimizer is not unique (degenerate smallest singular values)"
        if strict:
            raise DegenerateInput(msg)
        warnings.warn(msg, DegenerateInputWarning, stacklevel=2)
    S = u @ np.diag([1.0, 1.0, sign]) @ v.T
    return Rotation3(S)


def overlap_matrix(r_rho, A_rho, r_sigma, A_sigma):
    """K such that Tr(P_rho P_sigma(S)) = (1 + r.r' + Tr(S^T K)) / 4 for A' = A_sigma S."""
    r_rho = np.asarray(r_rho, dtype=float)
    r_sigma = np.asarray(r_sigma, dtype=float)
    return np.asarray(A_sigma).T @ (np.eye(3) + np.outer(r_sigma, r_rho)) @ np.asarray(A_rho)


def dn_via_purification(rho, sigma, objective="exact_overlap"):
    """D_N between two qubit states by explicit search over purifications of ``sigma``.

    ``rho`` keeps a fixed purification; the purification of ``sigma`` is
    rotated by ``S`` in SO(3), chosen either to maximize the purification
    overlap exactly (``"exact_overlap"``) or to minimize ``||A_sigma S - A_rho||``
    (``"hs_norm"``). The distance is then the square root of the entropy of
    the average of the two projectors.
    """
    r = to_bloch(rho)
    r2 = to_bloch(sigma)
    A = solve_A_system(r)
    A2 = solve_A_system(r2)
    if objective == "exact_overlap":
        target = (np.eye(3) + np.outer(r2.r, r.r)) @ A
    elif objective == "hs_norm":
        target = A
    else:
        raise ValueError(f"unknown objective {objective!r}")
    # A tie in the minimizer (e.g. pure or maximally mixed inputs) leaves the
    # optimal value unchanged, so it is recorded rather than warned about.
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateInputWarning)
        S = procrustes_so3(A2, target)
    P = assemble_qubit_purification(r, A)
    Q = assemble_qubit_purification(r2, A2 @ S.S)
    value = float(np.sqrt(von_neumann(0.5 * (P.P + Q.P))))
    tr = float(np.real(np.trace(P.P @ Q.P)))
    return DistanceReport(value, Method.PURIFICATION_MIN, {
        "objective": objective,
        "overlap": float(np.sqrt(max(tr, 0.0))),
        "rotation": S.S,
        "hs_residual": float(np.linalg.norm(A2 @ S.S - A)),
        "degenerate": any(issubclass(w.category, DegenerateInputWarning) for w in caught),
    })
