# D_N for mixed qubits, computed two ways
# =======================================
#
# Closed form: sqrt(phi(F)) with F the (non-squared) Uhlmann fidelity.
# Search: fix a purification of rho, rotate the purification of sigma over
# SO(3) and take the entropy of the averaged projectors.

import numpy as np

from qdist import dn_mixed_closed, dn_via_purification, fidelity, random_density, to_bloch
from qdist.purification import assemble_qubit_purification, solve_A_system

rho = np.diag([0.9, 0.1])
sigma = np.diag([0.7, 0.3])
print("F       =", fidelity(rho, sigma))
print("closed  =", dn_mixed_closed(rho, sigma).value)
print("search  =", dn_via_purification(rho, sigma).value)

# the (r, A) purification of a qubit
r = to_bloch(rho).r
A = solve_A_system(r)
qp = assemble_qubit_purification(r, A)
print("A =\n", A)
print("eigenvalues of P:", np.round(np.linalg.eigvalsh(qp.P)[::-1], 12))

# random pairs: the exact-overlap rotation attains the fidelity, while the
# Hilbert-Schmidt alignment of the A matrices generally does not
rng = np.random.default_rng(1)
for _ in range(5):
    a, b = random_density(2, rng), random_density(2, rng)
    exact = dn_via_purification(a, b, "exact_overlap")
    hs = dn_via_purification(a, b, "hs_norm")
    print(f"closed {dn_mixed_closed(a, b).value:.10f}  exact {exact.value:.10f}  "
          f"hs {hs.value:.10f}  overlap {exact.metadata['overlap']:.6f} vs F {fidelity(a, b):.6f}")
