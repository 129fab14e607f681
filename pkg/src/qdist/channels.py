"""Depolarizing channel on a qubit and a generic mixing map."""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .states import BlochVector, DensityMatrix, as_matrix, from_bloch, to_bloch


@dataclass(frozen=True)
class DepolarizingChannel:
    """rho -> p I/2 + (1 - p) rho, i.e. the Bloch vector shrinks by (1 - p)."""

    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"depolarizing probability must be in [0, 1], got {self.p}")

    @property
    def f(self):
        return 1.0 - (1.0 - self.p) ** 2

    def __call__(self, rho):
        return apply(self, rho)


def apply(ch, rho):
    """Apply the channel as an operator convex combination, cross-checked on the Bloch ball."""
    if not isinstance(ch, DepolarizingChannel):
        ch = DepolarizingChannel(ch)
    m = as_matrix(rho)
    if m.shape != (2, 2):
        raise DimensionMismatch(f"depolarizing channel acts on qubits, got dim {m.shape[0]}")
    out = ch.p * np.eye(2) / 2.0 + (1.0 - ch.p) * m
    via_bloch = from_bloch(contract_bloch(to_bloch(m), ch.p)).mat
    if np.max(np.abs(out - via_bloch)) > 1e-12:
        raise ArithmeticError("operator and Bloch encodings of the channel disagree")
    return DensityMatrix(out)


def contract_bloch(r, p):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"depolarizing probability must be in [0, 1], got {p}")
    return BlochVector((1.0 - p) * np.asarray(getattr(r, "r", r), dtype=float))


def mixing_map(rho, tau, p):
    """rho -> p tau + (1 - p) rho for a fixed state tau (a CPTP replacement mixture)."""
    a, b = as_matrix(rho), as_matrix(tau)
    if a.shape != b.shape:
        raise DimensionMismatch(f"states have shapes {a.shape} and {b.shape}")
    return DensityMatrix(p * b + (1.0 - p) * a)


def maximally_mixed(d):
    return DensityMatrix(np.eye(d) / d)
