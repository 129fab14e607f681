"""Exit criteria. Each test prints one PASS/FAIL line (also collected in the
terminal summary) before asserting."""
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from oracle_values import DN_09_07, H_ZERO_PLUS_MIX
from qdist import oracles
from qdist.channels import DepolarizingChannel, apply, maximally_mixed, mixing_map
from qdist.distances import dn_mixed_closed, dn_pure, fidelity, qjsd
from qdist.entropy import Ensemble, mixing_gap, mixture, von_neumann
from qdist.experiment import DEFAULT_R, SweepConfig, figure1, read_csv
from qdist.purification import (ap_update, assemble_qubit_purification, dn_via_purification,
                                purification_residuals, solve_A_system)
from qdist.states import (from_bloch, ket, projector, random_bloch, random_density, random_pure,
                          random_rotation, random_unitary, to_bloch)
from qdist.verify import random_neighbor
from qdist.distances import neighboring_overlap_deficit


def report(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


@pytest.fixture(scope="module")
def default_sweep():
    t0 = time.perf_counter()
    text = figure1(SweepConfig())
    return read_csv(text), time.perf_counter() - t0


def test_1_purification_matches_closed_form_on_sweep(default_sweep):
    rows, elapsed = default_sweep
    worst = max(abs(r["dn_procrustes_exact"] - r["dn_closed"]) for r in rows)
    # recompute at full precision, independent of the CSV rounding
    worst_fp = 0.0
    for r in DEFAULT_R:
        rho = from_bloch((0, 0, r))
        for p in np.linspace(0, 1, 101):
            sigma = apply(DepolarizingChannel(p), rho)
            worst_fp = max(worst_fp, abs(dn_via_purification(rho, sigma).value
                                         - dn_mixed_closed(rho, sigma).value))
    ok = len(rows) == 5 * 101 and worst <= 1e-6 and worst_fp <= 1e-6 and elapsed < 60
    report(1, ok, f"{len(rows)} grid points, max |exact - closed| = {worst_fp:.2e} "
                  f"(CSV {worst:.2e}), sweep {elapsed:.1f}s")


def test_2_procrustes_vs_euler_grid():
    rng = np.random.default_rng(2)
    worst, worst_excess = 0.0, -np.inf
    n_pairs = 20
    for _ in range(n_pairs):
        a, b = random_density(2, rng), random_density(2, rng)
        rep = dn_via_purification(a, b, "exact_overlap")
        r, r2 = to_bloch(a).r, to_bloch(b).r
        grid_ov, _ = oracles.max_purification_overlap_grid(
            r, solve_A_system(r), r2, solve_A_system(r2), step=0.005)
        worst = max(worst, abs(rep.metadata["overlap"] - grid_ov))
        worst_excess = max(worst_excess, rep.metadata["overlap"] - fidelity(a, b))
    ok = worst <= 1e-4 and worst_excess <= 1e-9
    report(2, ok, f"{n_pairs} pairs, max |procrustes - grid| overlap = {worst:.2e}, "
                  f"max overlap - F = {worst_excess:.2e}")


def test_3_metric_axioms():
    rng = np.random.default_rng(3)
    n = 10_000
    worst_tri, worst_sym, max_d, bad_ident, sq_viol = -np.inf, 0.0, 0.0, 0, 0
    for _ in range(n):
        d = int(rng.integers(2, 9))
        a, b, c = (random_density(d, rng) for _ in range(3))
        dab = dn_mixed_closed(a, b).value
        dbc = dn_mixed_closed(b, c).value
        dac = dn_mixed_closed(a, c).value
        worst_sym = max(worst_sym, abs(dab - dn_mixed_closed(b, a).value))
        worst_tri = max(worst_tri, dac - dab - dbc)
        max_d = max(max_d, dab, dbc, dac)
        f = fidelity(a, b)
        if (dab <= 1e-8) != (f >= 1 - 1e-8) or min(dab, dbc, dac) < 0:
            bad_ident += 1
        daa = dn_mixed_closed(a, a).value
        if not (daa <= 1e-8 and fidelity(a, a) >= 1 - 1e-8):
            bad_ident += 1
        if dac ** 2 > dab ** 2 + dbc ** 2:
            sq_viol += 1
    ok = (worst_sym == 0.0 and worst_tri <= 1e-9 and max_d <= 1.0 and bad_ident == 0
          and sq_viol >= 1)
    report(3, ok, f"{n} triples, symmetry gap {worst_sym:.1e}, worst triangle excess "
                  f"{worst_tri:.2e}, max D {max_d:.4f}, identity failures {bad_ident}, "
                  f"D^2 triangle violations {sq_viol}")


def test_4_purification_validity_and_op2():
    rng = np.random.default_rng(4)
    worst = [0.0, 0.0, 0.0]
    norms = [0.0, 1.0, 0.5, 0.999]
    for k in range(1000):
        r = random_bloch(rng, norm=norms[k] if k < 4 else (0.0 if k % 50 == 0 else
                                                           1.0 if k % 50 == 1 else None))
        qp = assemble_qubit_purification(r, solve_A_system(r) @ random_rotation(rng),
                                         validate=False)
        worst = [max(w, x) for w, x in zip(worst, purification_residuals(r.r, qp.P))]
    gram_ok = True
    for r in DEFAULT_R:
        rv = np.array([0, 0, r])
        A = solve_A_system(rv)
        for p in np.linspace(0, 1, 101):
            try:
                ap_update(A, rv, p, tol=1e-9)
            except Exception:
                gram_ok = False
    ok = worst[0] <= 1e-9 and worst[1] <= 1e-8 and worst[2] <= 1e-9 and gram_ok
    report(4, ok, f"1000 assemblies, |TrP-1| {worst[0]:.1e}, |P^2-P| {worst[1]:.1e}, "
                  f"|Tr_aux P - rho| {worst[2]:.1e}; op2 Gram consistency "
                  f"{'ok' if gram_ok else 'FAILED'}")


def test_5_unitary_invariance_and_contractivity():
    rng = np.random.default_rng(5)
    n = 10_000
    worst_u, worst_c = 0.0, -np.inf
    for _ in range(n):
        d = int(rng.integers(2, 9))
        a, b = random_density(d, rng), random_density(d, rng)
        u = random_unitary(d, rng)
        base = dn_mixed_closed(a, b).value
        rot = dn_mixed_closed(u @ a.mat @ u.conj().T, u @ b.mat @ u.conj().T).value
        worst_u = max(worst_u, abs(rot - base))
        for p in (0.1, 0.5, 0.9):
            if d == 2:
                ch = DepolarizingChannel(p)
                ea, eb = apply(ch, a), apply(ch, b)
            else:
                mm = maximally_mixed(d)
                ea, eb = mixing_map(a, mm, p), mixing_map(b, mm, p)
            worst_c = max(worst_c, dn_mixed_closed(ea, eb).value - base)
    ok = worst_u <= 1e-9 and worst_c <= 1e-9
    report(5, ok, f"{n} pairs, max unitary change {worst_u:.2e}, "
                  f"max D(E a, E b) - D(a, b) = {worst_c:.2e}")


def test_6_entropy_inequalities():
    rng = np.random.default_rng(6)
    min_gap = np.inf
    for _ in range(10_000):
        d = int(rng.integers(2, 5))
        w = rng.random()
        min_gap = min(min_gap, mixing_gap(Ensemble(
            [w, 1 - w], [random_density(d, rng), random_density(d, rng)])))
    min_strict = np.inf
    for _ in range(1000):
        d = int(rng.integers(2, 5))
        w = rng.uniform(0.1, 0.9)
        e = Ensemble([w, 1 - w], [projector(random_pure(d, rng)), projector(random_pure(d, rng))])
        min_strict = min(min_strict, mixing_gap(e))
    zero, plus = projector(ket(1, 0)), projector(ket(1 / np.sqrt(2), 1 / np.sqrt(2)))
    worked = von_neumann(mixture(Ensemble([0.5, 0.5], [zero, plus])))
    ok = (min_gap >= -1e-10 and min_strict > 1e-6 and abs(worked - 0.600876) <= 1e-6
          and abs(worked - H_ZERO_PLUS_MIX) <= 1e-12)
    report(6, ok, f"min mixing gap {min_gap:.2e}, min gap on non-orthogonal pure ensembles "
                  f"{min_strict:.2e}, H_N(|0>,|+> mixture) = {worked:.6f}")


def test_7_pure_state_identity():
    rng = np.random.default_rng(7)
    worst_q, worst_r = 0.0, 0.0
    for _ in range(10_000):
        d = int(rng.integers(2, 9))
        psi, phi = random_pure(d, rng), random_pure(d, rng)
        ent, ov = dn_pure(psi, phi, return_both=True)
        worst_r = max(worst_r, abs(ent - ov))
        worst_q = max(worst_q, abs(qjsd(projector(psi), projector(phi)) - ent ** 2))
    ok = worst_q <= 1e-9 and worst_r <= 1e-9
    report(7, ok, f"10000 pure pairs, |qjsd - D^2| {worst_q:.2e}, "
                  f"|entropy route - phi route| {worst_r:.2e}")


def test_8_neighboring_expansion():
    rng = np.random.default_rng(8)
    lo, hi = np.inf, -np.inf
    for _ in range(1000):
        d = int(rng.integers(2, 9))
        p, dp = random_neighbor(d, rng, size=1e-5)
        actual, predicted = neighboring_overlap_deficit(p, dp, rng.uniform(0, 2 * np.pi, d))
        ratio = actual / predicted
        lo, hi = min(lo, ratio), max(hi, ratio)
    ok = 1 - 1e-3 <= lo and hi <= 1 + 1e-3
    report(8, ok, f"1000 perturbations of norm 1e-5, ratio in [{lo:.6f}, {hi:.6f}]")


def test_9_figure1_shape(default_sweep):
    rows, _ = default_sweep
    cols = ("dn_closed", "dn_procrustes_exact")
    by_r = {}
    for row in rows:
        by_r.setdefault(row["r"], []).append(row)
    zero_ok = all(row[c] == 0 for row in rows if row["p"] == 0 for c in cols)
    mono_p = all(b[c] >= a[c] for seq in by_r.values() for a, b in zip(seq, seq[1:]) for c in cols)
    rs = sorted(by_r)
    mono_r = all(by_r[r2][i]["dn_closed"] >= by_r[r1][i]["dn_closed"]
                 for r1, r2 in zip(rs, rs[1:]) for i in range(1, len(by_r[r1])))
    spot = next(row["dn_closed"] for row in rows
                if row["r"] == 0.8 and abs(row["p"] - 0.5) < 1e-12)
    ok = zero_ok and mono_p and mono_r and abs(spot - 0.348590) <= 1e-6 \
        and abs(spot - DN_09_07) <= 1e-6
    report(9, ok, f"D=0 at p=0: {zero_ok}, monotone in p: {mono_p}, ordered in r: {mono_r}, "
                  f"D(r=0.8, p=0.5) = {spot:.12g}")
