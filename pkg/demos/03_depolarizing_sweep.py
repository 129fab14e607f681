# Distance to the depolarized state
# =================================
#
# D_N(rho, E_p(rho)) for E_p(rho) = p I/2 + (1-p) rho, as a function of p,
# for several Bloch-vector lengths r. The same data is what
# `qdist figure1` writes as CSV.

from qdist.experiment import SweepConfig, figure1, read_csv

rows = read_csv(figure1(SweepConfig(p_steps=11)))

rs = sorted({row["r"] for row in rows})
print("p     " + "".join(f"r={r:<8}" for r in rs))
for p in sorted({row["p"] for row in rows}):
    vals = [next(x["dn_closed"] for x in rows if x["r"] == r and x["p"] == p) for r in rs]
    print(f"{p:4.2f}  " + "".join(f"{v:<10.6f}" for v in vals))

# the search and the closed form agree everywhere on the grid
print("max |search - closed| =", max(abs(x["delta_exact_vs_closed"]) for x in rows))
# for these pairs the Bloch vectors are parallel and the HS objective is exact too
print("max |hs - closed|     =", max(abs(x["dn_procrustes_hs"] - x["dn_closed"]) for x in rows))
