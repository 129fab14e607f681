"""Distances between quantum states.

The fidelity convention throughout is the *non-squared* one,
``F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho))``, which equals the
overlap ``|<psi|phi>|`` for pure states. Many libraries square this.
"""
import enum
from dataclasses import dataclass, field

import numpy as np

from .entropy import _entropy_bits, relative_entropy, von_neumann
from .errors import DimensionMismatch, DomainError, NegativeProbability
from .linalg import mat_sqrt_psd
from .states import as_matrix, as_vector

PHI_CLAMP = 1e-12


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    PURIFICATION_MIN = "purification_min"


@dataclass(frozen=True)
class DistanceReport:
    value: float
    method: Method = Method.CLOSED_FORM
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.value >= 0:
            raise ValueError(f"distance must be non-negative, got {self.value}")

    def __float__(self):
        return float(self.value)


def _same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionMismatch(f"states have shapes {a.shape} and {b.shape}")


def _clamp_unit(x):
    if x < -PHI_CLAMP or x > 1.0 + PHI_CLAMP:
        raise DomainError(f"argument {x!r} outside [0, 1]")
    return min(max(float(x), 0.0), 1.0)


def phi(x):
    """Entropy (bits) of the two-point distribution ((1-x)/2, (1+x)/2).

    Equals 1 at x = 0 and 0 at x = 1, strictly decreasing in between. Inputs
    within 1e-12 of [0, 1] are clamped.
    """
    x = _clamp_unit(x)
    return _entropy_bits([(1.0 - x) / 2.0, (1.0 + x) / 2.0])


def overlap(psi, phi_):
    a, b = as_vector(psi), as_vector(phi_)
    _same_shape(a, b)
    return min(float(abs(np.vdot(a, b))), 1.0)


def dn_pure(psi, phi_, return_both=False):
    """D_N between pure states, the square root of H_N of the equal mixture.

    Computed from the entropy of ``(|psi><psi| + |phi><phi|)/2`` and,
    independently, as ``sqrt(phi(|<psi|phi>|))``; ``return_both=True`` returns
    the pair so callers can compare them.
    """
    a, b = as_vector(psi), as_vector(phi_)
    _same_shape(a, b)
    avg = 0.5 * (np.outer(a, np.conj(a)) + np.outer(b, np.conj(b)))
    via_entropy = np.sqrt(von_neumann(avg))
    via_overlap = np.sqrt(phi(overlap(a, b)))
    if return_both:
        return float(via_entropy), float(via_overlap)
    return float(via_entropy)


def qjsd(rho, sigma):
    """Quantum Jensen-Shannon divergence H((rho+sigma)/2) - H(rho)/2 - H(sigma)/2."""
    a, b = as_matrix(rho), as_matrix(sigma)
    _same_shape(a, b)
    a, b = _canonical_pair(a, b)
    val = von_neumann(0.5 * (a + b)) - 0.5 * von_neumann(a) - 0.5 * von_neumann(b)
    return min(max(val, 0.0), 1.0)


def _canonical_pair(a, b):
    # fixed argument order makes symmetric quantities bitwise symmetric
    a = np.ascontiguousarray(a, dtype=complex)
    b = np.ascontiguousarray(b, dtype=complex)
    return (b, a) if a.tobytes() > b.tobytes() else (a, b)


def fidelity(rho, sigma):
    """Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0, 1].

    Evaluated as the sum of singular values of ``sqrt(rho) sqrt(sigma)``,
    the same number without a second matrix square root. The outer root
    would turn a rounding error of 1e-16 on a tiny eigenvalue into ~1e-8.
    """
    a, b = as_matrix(rho), as_matrix(sigma)
    _same_shape(a, b)
    a, b = _canonical_pair(a, b)
    sv = np.linalg.svd(mat_sqrt_psd(a) @ mat_sqrt_psd(b), compute_uv=False)
    return min(max(float(np.sum(sv)), 0.0), 1.0)


def bures(rho, sigma):
    return float(np.sqrt(max(2.0 - 2.0 * fidelity(rho, sigma), 0.0)))


def _aligned_gap(a, b):
    # ||a - e^{it} b||^2 / 2 with the phase chosen to make <a|e^{it} b> real
    # positive; equals 1 - |<a|b>| for unit vectors without the cancellation.
    ip = np.vdot(b, a)
    ph = ip / abs(ip) if abs(ip) > 0 else 1.0
    return 0.5 * float(np.sum(np.abs(a - ph * b) ** 2))


def wootters(psi, phi_):
    """Angle arccos|<psi|phi>| between two rays.

    Evaluated as ``2 arcsin(||psi - e^{it} phi|| / 2)``, which stays accurate
    for nearly parallel states where arccos loses half the digits.
    """
    a, b = as_vector(psi), as_vector(phi_)
    _same_shape(a, b)
    chord = np.sqrt(2.0 * _aligned_gap(a, b))
    return float(2.0 * np.arcsin(min(chord / 2.0, 1.0)))


def relent(rho, sigma):
    return relative_entropy(rho, sigma)


def dn_mixed_closed(rho, sigma):
    """D_N for arbitrary states through the fidelity, sqrt(phi(F))."""
    f = fidelity(rho, sigma)
    return DistanceReport(float(np.sqrt(phi(f))), Method.CLOSED_FORM, {"fidelity": f})


def neighboring_overlap_deficit(p, dp, phases=None, p_min=1e-6):
    """Overlap deficit between a state and its neighbour, with the second-order prediction.

    The state has amplitudes ``sqrt(p_j) exp(i phase_j)``; the neighbour uses
    ``p + dp`` with the same phases.

    Returns:
        ``(1 - |<psi|psi~>|, sum_j dp_j**2 / p_j / 8)``.
    """
    p = np.asarray(p, dtype=float)
    dp = np.asarray(dp, dtype=float)
    if p.shape != dp.shape:
        raise DimensionMismatch("p and dp differ in length")
    if np.any(p + dp < 0):
        raise NegativeProbability("p + dp has a negative component")
    moved = dp != 0
    if np.any(p[moved] <= p_min):
        raise DomainError(f"perturbed components need p_j > {p_min:g}")
    if phases is None:
        phases = np.zeros_like(p)
    ph = np.exp(1j * np.asarray(phases, dtype=float))
    psi = np.sqrt(p) * ph
    psi_t = np.sqrt(p + dp) * ph
    actual = _aligned_gap(psi, psi_t)
    predicted = float(np.sum(dp[moved] ** 2 / p[moved]) / 8.0)
    return float(actual), predicted


METRICS = {
    "dn": lambda a, b: dn_mixed_closed(a, b).value,
    "qjsd": qjsd,
    "bures": bures,
    "fidelity": fidelity,
    "relent": relent,
}
