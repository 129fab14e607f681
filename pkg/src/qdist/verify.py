"""Randomized property suites behind ``qdist verify``.

Every suite draws its states from its own seeded generator, so a report is a
pure function of ``(trials, dims, seed)``.
"""
from dataclasses import dataclass, field

import numpy as np

from .channels import DepolarizingChannel, apply, maximally_mixed, mixing_map
from .distances import dn_mixed_closed, dn_pure, fidelity, qjsd, neighboring_overlap_deficit
from .entropy import Ensemble, mixing_gap
from .purification import (assemble_qubit_purification, dn_via_purification,
                           purification_residuals, solve_A_system)
from .states import (projector, random_bloch, random_density, random_pure, random_rotation,
                     random_unitary)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    worst: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0

    def record(self, good, residual=0.0):
        if good:
            self.passed += 1
        else:
            self.failed += 1
        self.worst = max(self.worst, float(residual))


def _dims(rng, dims):
    lo, hi = dims
    return int(rng.integers(lo, hi + 1))


def metric_axioms(trials, dims, rng):
    res = SuiteResult("metric_axioms")
    sq_violations = 0
    for _ in range(trials):
        d = _dims(rng, dims)
        a, b, c = (random_density(d, rng) for _ in range(3))
        dab = dn_mixed_closed(a, b).value
        dba = dn_mixed_closed(b, a).value
        dbc = dn_mixed_closed(b, c).value
        dac = dn_mixed_closed(a, c).value
        tri = dac - dab - dbc
        f = fidelity(a, b)
        good = (abs(dab - dba) <= 1e-12 and 0.0 <= dab <= 1.0 and tri <= 1e-9
                and (dab <= 1e-8) == (f >= 1 - 1e-8))
        res.record(good, max(tri, abs(dab - dba), 0.0))
        self_d = dn_mixed_closed(a, a).value
        res.record(self_d <= 1e-8, self_d)
        if dac ** 2 > dab ** 2 + dbc ** 2 + 1e-9:
            sq_violations += 1
    res.notes.append(f"squared-distance triangle violations: {sq_violations}")
    return res


def pure_identity(trials, dims, rng):
    res = SuiteResult("pure_state_identity")
    for _ in range(trials):
        d = _dims(rng, dims)
        psi, phi = random_pure(d, rng), random_pure(d, rng)
        ent, ov = dn_pure(psi, phi, return_both=True)
        err = max(abs(ent - ov), abs(qjsd(projector(psi), projector(phi)) - ent ** 2))
        res.record(err <= 1e-9, err)
    return res


def oracle_equivalence(trials, dims, rng):
    res = SuiteResult("purification_vs_closed_form")
    for _ in range(trials):
        a, b = random_density(2, rng), random_density(2, rng)
        rep = dn_via_purification(a, b, "exact_overlap")
        err = abs(rep.value - dn_mixed_closed(a, b).value)
        excess = rep.metadata["overlap"] - fidelity(a, b)
        res.record(err <= 1e-6 and excess <= 1e-9, err)
    return res


def purification_invariants(trials, dims, rng):
    res = SuiteResult("purification_invariants")
    norms = (0.0, 0.5, 0.999, 1.0)
    for k in range(trials):
        norm = norms[k % len(norms)] if k < 4 * len(norms) else None
        r = random_bloch(rng, norm=norm)
        S = random_rotation(rng)
        qp = assemble_qubit_purification(r, solve_A_system(r) @ S, validate=False)
        t, pur, red = purification_residuals(r.r, qp.P)
        res.record(t <= 1e-9 and pur <= 1e-8 and red <= 1e-9, max(t, pur, red))
    return res


def contractivity(trials, dims, rng):
    res = SuiteResult("unitary_invariance_and_contractivity")
    for _ in range(trials):
        d = _dims(rng, dims)
        a, b = random_density(d, rng), random_density(d, rng)
        u = random_unitary(d, rng)
        base = dn_mixed_closed(a, b).value
        rot = dn_mixed_closed(u @ a.mat @ u.conj().T, u @ b.mat @ u.conj().T).value
        worst = abs(rot - base)
        good = worst <= 1e-9
        for p in (0.1, 0.5, 0.9):
            if d == 2:
                ea, eb = apply(DepolarizingChannel(p), a), apply(DepolarizingChannel(p), b)
            else:
                mm = maximally_mixed(d)
                ea, eb = mixing_map(a, mm, p), mixing_map(b, mm, p)
            excess = dn_mixed_closed(ea, eb).value - base
            good = good and excess <= 1e-9
            worst = max(worst, excess)
        res.record(good, worst)
    return res


def mixing_gap_suite(trials, dims, rng):
    res = SuiteResult("mixing_gap")
    for _ in range(trials):
        d = _dims(rng, (max(dims[0], 2), min(dims[1], 4)))
        w = rng.uniform(0.1, 0.9)
        mixed = Ensemble([w, 1 - w], [random_density(d, rng), random_density(d, rng)])
        g_mixed = mixing_gap(mixed)
        pure = Ensemble([w, 1 - w], [projector(random_pure(d, rng)),
                                     projector(random_pure(d, rng))])
        g_pure = mixing_gap(pure)
        res.record(g_mixed >= -1e-10 and g_pure > 1e-6, max(-g_mixed, 0.0))
    return res


def overlap_expansion(trials, dims, rng):
    res = SuiteResult("neighboring_overlap_expansion")
    for _ in range(trials):
        d = _dims(rng, dims)
        p, dp = random_neighbor(d, rng)
        actual, predicted = neighboring_overlap_deficit(p, dp, rng.uniform(0, 2 * np.pi, d))
        dev = abs(actual / predicted - 1.0)
        res.record(dev <= 1e-3, dev)
    return res


def random_neighbor(d, rng, size=1e-5, p_floor=0.01):
    """Random probability vector with entries >= p_floor and a zero-sum step of norm ``size``."""
    p = rng.dirichlet(np.ones(d))
    p = p_floor + (1.0 - d * p_floor) * p
    dp = rng.standard_normal(d)
    dp -= dp.mean()
    dp *= size / np.linalg.norm(dp)
    return p, dp


SUITES = (metric_axioms, pure_identity, oracle_equivalence, purification_invariants,
          contractivity, mixing_gap_suite, overlap_expansion)


def run_all(trials, dims=(2, 8), seed=0):
    if trials < 1:
        raise ValueError("trials must be at least 1")
    out = []
    for i, suite in enumerate(SUITES):
        rng = np.random.default_rng([seed, i])
        out.append(suite(trials, dims, rng))
    return out


def format_report(results):
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name}: passed={r.passed} failed={r.failed} "
                     f"worst_residual={r.worst:.3e}")
        lines.extend(f"     {n}" for n in r.notes)
    n_ok = sum(r.ok for r in results)
    lines.append(f"{n_ok}/{len(results)} suites passed")
    return "\n".join(lines) + "\n"
