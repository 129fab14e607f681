"""Entropy-and-purification distance D_N between quantum states.

D_N(rho, sigma) is the smallest square-rooted von Neumann entropy of the equal
mixture of a purification of rho and one of sigma. It equals
sqrt(phi(F(rho, sigma))) with F the (non-squared) Uhlmann fidelity.
"""
from .channels import DepolarizingChannel, apply, contract_bloch, mixing_map
from .distances import (DistanceReport, Method, bures, dn_mixed_closed, dn_pure, fidelity,
                        neighboring_overlap_deficit, phi, qjsd, wootters)
from .entropy import Ensemble, ProbDist, mixing_gap, mixture, relative_entropy, shannon, von_neumann
from .purification import (QubitPurification, Rotation3, ap_update, assemble_qubit_purification,
                           dn_via_purification, procrustes_so3, solve_A_system, spectral_purify,
                           unitary_freedom_check)
from .states import (BlochVector, DensityMatrix, PureState, from_bloch, parse_state, projector,
                     random_density, random_pure, to_bloch)

__all__ = [name for name in dir() if not name.startswith("_")]
