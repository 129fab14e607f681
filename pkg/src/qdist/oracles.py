"""Brute-force SO(3) search used to cross-check the Procrustes solutions.

Objectives here are linear in the rotation, ``c + Tr(S^T L)``. With
Z-Y-Z Euler angles ``S = Rz(a) Ry(b) Rz(g)`` and ``Rz(t) = Z0 + cos t Zc + sin t Zs``
the objective on a fixed-``b`` slice is ``f(a)^T M(b) f(g)`` with
``f(t) = (1, cos t, sin t)``, so each slice of the grid is one small matrix product.
"""
import numpy as np
from scipy.optimize import minimize

from .linalg import euler_zyz, rot_y
from .purification import assemble_operator

_Z = (np.diag([0.0, 0.0, 1.0]),
      np.diag([1.0, 1.0, 0.0]),
      np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]))


def _grid(step, upper):
    n = int(np.ceil(upper / step))
    return np.arange(n + 1) * step if upper == np.pi else np.arange(n) * step


def euler_grid_max(L, step=0.005, refine=False):
    """Maximize Tr(S^T L) over S in SO(3) on a uniform Euler-angle grid.

    Grid: alpha, gamma in [0, 2 pi) and beta in [0, pi], all with spacing
    ``step``. With ``refine`` the best grid point seeds a Nelder-Mead polish.

    Returns:
        (best value, (alpha, beta, gamma)).
    """
    L = np.asarray(L, dtype=float)
    alphas = _grid(step, 2 * np.pi)
    betas = _grid(step, np.pi)
    fa = np.stack([np.ones_like(alphas), np.cos(alphas), np.sin(alphas)], axis=1)
    best, arg = -np.inf, None
    for b in betas:
        ry = rot_y(b)
        M = np.array([[np.sum((za @ ry @ zb) * L) for zb in _Z] for za in _Z])
        vals = (fa @ M) @ fa.T
        k = int(np.argmax(vals))
        if vals.flat[k] > best:
            i, j = divmod(k, alphas.size)
            best, arg = float(vals.flat[k]), (alphas[i], b, alphas[j])
    if refine:
        res = minimize(lambda x: -np.sum(euler_zyz(*x) * L), np.array(arg),
                       method="Nelder-Mead", options={"xatol": 1e-10, "fatol": 1e-14})
        if -res.fun > best:
            best, arg = float(-res.fun), tuple(res.x)
    return best, arg


def procrustes_grid(B, C, step=0.01, refine=True):
    """Minimum of ||B S - C||_HS over an Euler grid, and the minimizing rotation."""
    B = np.asarray(B, dtype=float)
    C = np.asarray(C, dtype=float)
    val, arg = euler_grid_max(B.T @ C, step=step, refine=refine)
    sq = np.sum(B * B) + np.sum(C * C) - 2.0 * val
    return float(np.sqrt(max(sq, 0.0))), euler_zyz(*arg)


def overlap_affine_form(r_rho, A_rho, r_sigma, A_sigma):
    """Constant c and matrix L with Tr(P_rho P_sigma(S)) = c + Tr(S^T L).

    Found by probing the assembled operators at S = 0 and S = E_ij, relying
    only on the purification operator being affine in A' = A_sigma S.
    """
    P = assemble_operator(r_rho, A_rho)
    A_sigma = np.asarray(A_sigma, dtype=float)

    def tr(S):
        return float(np.real(np.trace(P @ assemble_operator(r_sigma, A_sigma @ S))))

    c = tr(np.zeros((3, 3)))
    L = np.zeros((3, 3))
    for i in range(3):
        for j in range(3):
            E = np.zeros((3, 3))
            E[i, j] = 1.0
            L[i, j] = tr(E) - c
    return c, L


def max_purification_overlap_grid(r_rho, A_rho, r_sigma, A_sigma, step=0.005, refine=False):
    """Largest |<psi|phi(S)>| over the Euler grid, |<psi|phi>|^2 = Tr(P Q)."""
    c, L = overlap_affine_form(r_rho, A_rho, r_sigma, A_sigma)
    val, arg = euler_grid_max(L, step=step, refine=refine)
    return float(np.sqrt(max(c + val, 0.0))), euler_zyz(*arg)
