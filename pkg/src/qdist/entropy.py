"""Shannon, von Neumann and relative entropies (all in bits) and the mixing bound."""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidState, SupportViolation
from .linalg import eigvalsh_desc, hermitian_eig
from .states import DensityMatrix, as_matrix

EPS_ENT = 1e-12
EPS_SUPPORT = 1e-10


@dataclass(frozen=True)
class ProbDist:
    p: np.ndarray

    def __post_init__(self):
        p = np.array(self.p, dtype=float).reshape(-1)
        if np.any(p < 0):
            raise InvalidState("probabilities must be non-negative")
        if abs(p.sum() - 1.0) > 1e-10:
            raise InvalidState(f"probabilities must sum to 1, got {p.sum():.12g}")
        object.__setattr__(self, "p", p)


@dataclass(frozen=True)
class Ensemble:
    weights: ProbDist
    members: Sequence[DensityMatrix]

    def __post_init__(self):
        if not isinstance(self.weights, ProbDist):
            object.__setattr__(self, "weights", ProbDist(self.weights))
        members = tuple(m if isinstance(m, DensityMatrix) else DensityMatrix(as_matrix(m))
                        for m in self.members)
        if len(members) != len(self.weights.p):
            raise DimensionMismatch(
                f"{len(self.weights.p)} weights for {len(members)} members")
        if len({m.dim for m in members}) > 1:
            raise DimensionMismatch("ensemble members have different dimensions")
        object.__setattr__(self, "members", members)


def _entropy_bits(values):
    # Entries below EPS_ENT are rounding noise: drop them and renormalize, so a
    # distribution with one surviving entry has entropy exactly 0.
    v = np.asarray(values, dtype=float)
    v = v[v > EPS_ENT]
    if v.size <= 1:
        return 0.0
    v = v / v.sum()
    return float(max(-np.sum(v * np.log2(v)), 0.0))


def shannon(p):
    """Shannon entropy -sum p log2 p, with 0 log 0 = 0."""
    if not isinstance(p, ProbDist):
        p = ProbDist(p)
    return _entropy_bits(p.p)


def von_neumann(rho):
    """von Neumann entropy -Tr(rho log2 rho): the Shannon entropy of the spectrum."""
    return _entropy_bits(eigvalsh_desc(as_matrix(rho)))


def relative_entropy(rho, sigma):
    """Quantum relative entropy Tr[rho (log2 rho - log2 sigma)].

    Raises:
        SupportViolation: if rho has weight outside the support of sigma.
    """
    a, b = as_matrix(rho), as_matrix(sigma)
    if a.shape != b.shape:
        raise DimensionMismatch(f"states have shapes {a.shape} and {b.shape}")
    mu, v = hermitian_eig(b)
    # weight of rho on each eigenvector of sigma
    weights = np.real(np.einsum("ki,kl,li->i", np.conj(v), a, v))
    null = mu < EPS_SUPPORT
    if np.any(weights[null] >= EPS_SUPPORT):
        leak = weights[null].max()
        raise SupportViolation(
            f"support of rho is not contained in support of sigma "
            f"(weight {leak:.3e} on the null space of sigma)")
    cross = float(np.sum(weights[~null] * np.log2(mu[~null])))
    val = -von_neumann(a) - cross
    if -1e-12 < val < 0:
        val = 0.0
    return val


def mixture(e):
    """sum_i p_i rho_i as a DensityMatrix."""
    m = sum(w * rho.mat for w, rho in zip(e.weights.p, e.members))
    return DensityMatrix(m)


def mixing_gap(e):
    """sum_i p_i H_N(rho_i) + H_S(p) - H_N(sum_i p_i rho_i).

    Non-negative, and zero exactly when the members have mutually orthogonal
    supports.
    """
    avg = sum(w * von_neumann(rho) for w, rho in zip(e.weights.p, e.members))
    return avg + shannon(e.weights) - von_neumann(mixture(e))
