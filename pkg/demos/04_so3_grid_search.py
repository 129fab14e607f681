# Procrustes vs. brute force over SO(3)
# =====================================
#
# The overlap of two purifications is affine in the rotation S, so the
# optimum can be found by SVD. Here we check it against an exhaustive grid
# over Z-Y-Z Euler angles.

import time

import numpy as np

from qdist import fidelity, random_density, to_bloch
from qdist.oracles import max_purification_overlap_grid, procrustes_grid
from qdist.purification import dn_via_purification, procrustes_so3, solve_A_system

rng = np.random.default_rng(4)
B, C = rng.standard_normal((3, 3)), rng.standard_normal((3, 3))
S = procrustes_so3(B, C).S
print("SVD  ||BS - C|| =", np.linalg.norm(B @ S - C))
print("grid ||BS - C|| =", procrustes_grid(B, C, step=0.01)[0])

a, b = random_density(2, rng), random_density(2, rng)
r, r2 = to_bloch(a).r, to_bloch(b).r
t = time.perf_counter()
grid_overlap, _ = max_purification_overlap_grid(r, solve_A_system(r), r2, solve_A_system(r2),
                                                step=0.005)
print(f"grid overlap      {grid_overlap:.8f}  ({time.perf_counter() - t:.1f}s)")
print(f"procrustes overlap {dn_via_purification(a, b).metadata['overlap']:.8f}")
print(f"fidelity           {fidelity(a, b):.8f}")
