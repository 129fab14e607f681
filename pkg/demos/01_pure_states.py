# D_N for pure states
# ===================
#
# For two pure states D_N is the square root of the von Neumann entropy of
# their equal mixture. It only depends on the overlap |<psi|phi>|.

import numpy as np

from qdist import dn_pure, phi, projector, qjsd, random_pure, wootters
from qdist.states import ket

zero = ket(1, 0)
plus = ket(1 / np.sqrt(2), 1 / np.sqrt(2))

# entropy of the mixture vs. the overlap formula
print("D_N(|0>, |+>) =", dn_pure(zero, plus, return_both=True))
print("sqrt(phi(1/sqrt 2)) =", np.sqrt(phi(1 / np.sqrt(2))))

# squared, it is the quantum Jensen-Shannon divergence of the projectors
print("qjsd =", qjsd(projector(zero), projector(plus)), " D_N^2 =", dn_pure(zero, plus) ** 2)

# phases don't matter; orthogonal states sit at the maximal distance 1
print(dn_pure(plus, np.exp(1.3j) * plus.vec), dn_pure(zero, ket(0, 1)))

# compare with the Wootters angle along a great circle of the Bloch sphere
for t in np.linspace(0, np.pi / 2, 7):
    s = ket(np.cos(t), np.sin(t))
    print(f"angle {t:5.3f}  D_N {dn_pure(zero, s):.6f}  d_W {wootters(zero, s):.6f}")

# D_N is a metric, D_N^2 is not: three points on that circle
a, b, c = (ket(np.cos(t), np.sin(t)) for t in (0.0, 0.3, 0.6))
print("triangle on D_N:  ", dn_pure(a, c), "<=", dn_pure(a, b) + dn_pure(b, c))
print("triangle on D_N^2:", dn_pure(a, c) ** 2, ">", dn_pure(a, b) ** 2 + dn_pure(b, c) ** 2)

# random states in higher dimension
rng = np.random.default_rng(0)
print([round(dn_pure(random_pure(6, rng), random_pure(6, rng)), 4) for _ in range(5)])
