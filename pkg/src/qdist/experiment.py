"""Distance between a qubit state and its depolarized image, swept over (r, p)."""
import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .channels import DepolarizingChannel, apply
from .distances import dn_mixed_closed
from .purification import dn_via_purification
from .states import from_bloch, random_bloch

DEFAULT_R = (0.2, 0.4, 0.6, 0.8, 0.999)
METHODS = ("closed", "procrustes_hs", "procrustes_exact")
HEADER = ("r", "p", "dn_closed", "dn_procrustes_hs", "dn_procrustes_exact",
          "delta_exact_vs_closed")


@dataclass
class SweepConfig:
    r_values: tuple = DEFAULT_R
    p_steps: int = 101
    methods: tuple = METHODS
    seed: int | None = None
    output_path: str | None = None

    def __post_init__(self):
        self.r_values = tuple(float(r) for r in self.r_values)
        self.methods = tuple(self.methods)
        if any(not 0.0 <= r <= 1.0 for r in self.r_values):
            raise ValueError("r values must lie in [0, 1]")
        if self.p_steps < 2:
            raise ValueError("p_steps must be at least 2")
        bad = set(self.methods) - set(METHODS)
        if bad:
            raise ValueError(f"unknown methods {sorted(bad)}; choose from {METHODS}")

    @property
    def p_grid(self):
        return np.linspace(0.0, 1.0, self.p_steps)


def _axis(seed):
    if seed is None:
        return np.array([0.0, 0.0, 1.0])
    return random_bloch(seed, norm=1.0).r


def sweep_rows(cfg):
    """Yield one dict per (r, p) in deterministic order."""
    axis = _axis(cfg.seed)
    for r in cfg.r_values:
        rho = from_bloch(r * axis)
        for p in cfg.p_grid:
            sigma = apply(DepolarizingChannel(float(p)), rho)
            row = {"r": r, "p": float(p)}
            try:
                if "closed" in cfg.methods:
                    row["dn_closed"] = dn_mixed_closed(rho, sigma).value
                if "procrustes_hs" in cfg.methods:
                    row["dn_procrustes_hs"] = dn_via_purification(rho, sigma, "hs_norm").value
                if "procrustes_exact" in cfg.methods:
                    row["dn_procrustes_exact"] = dn_via_purification(
                        rho, sigma, "exact_overlap").value
            except Exception as exc:
                raise RuntimeError(f"sweep failed at r={r!r}, p={p!r}: {exc}") from exc
            if "dn_closed" in row and "dn_procrustes_exact" in row:
                row["delta_exact_vs_closed"] = row["dn_procrustes_exact"] - row["dn_closed"]
            yield row


def _fmt(x):
    return "" if x is None else f"{x:.12g}"


def write_csv(rows, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(HEADER)
    for row in rows:
        w.writerow([_fmt(row.get(k)) for k in HEADER])


def figure1(cfg):
    """Run the sweep; write CSV to ``cfg.output_path`` if set. Returns the CSV text."""
    buf = io.StringIO()
    write_csv(sweep_rows(cfg), buf)
    text = buf.getvalue()
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    return text


def read_csv(text):
    """Parse sweep CSV text back into a list of dicts with floats (None for blanks)."""
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append({k: (float(v) if v != "" else None) for k, v in rec.items()})
    return rows
