"""``qdist`` command-line front end.

Exit codes: 0 success, 1 a verification property failed, 2 usage, parse or
validation error, 3 relative entropy undefined (support violation).
"""
import argparse
import sys

from . import distances
from .errors import QdistError, SupportViolation
from .experiment import METHODS, SweepConfig, figure1
from .purification import dn_via_purification
from .states import load_state
from .verify import format_report, run_all

METRIC_NAMES = ("dn", "qjsd", "bures", "wootters", "relent", "fidelity")
_PURIFY = {"purify-hs": "hs_norm", "purify-exact": "exact_overlap"}


class UsageError(Exception):
    pass


def _state_vector_if_pure(rho):
    from .linalg import hermitian_eig
    w, v = hermitian_eig(rho.mat)
    if not rho.is_pure():
        raise UsageError("wootters distance needs pure states; "
                         f"purity Tr(rho^2) = {rho.purity():.12g} < 1")
    return v[:, 0]


def cmd_distance(args, out):
    a = load_state(args.a)
    b = load_state(args.b)
    if a.dim != b.dim:
        raise UsageError(f"states have different dimensions ({a.dim} and {b.dim})")
    meta = {}
    method = args.method
    if args.metric == "dn" and method in _PURIFY:
        if a.dim != 2:
            raise UsageError("purification methods are implemented for qubits only")
        rep = dn_via_purification(a, b, _PURIFY[method])
        value = rep.value
        meta = {"overlap": rep.metadata["overlap"]}
    elif args.metric == "dn":
        rep = distances.dn_mixed_closed(a, b)
        value = rep.value
        meta = {"fidelity": rep.metadata["fidelity"]}
    elif args.metric == "wootters":
        value = distances.wootters(_state_vector_if_pure(a), _state_vector_if_pure(b))
    else:
        value = distances.METRICS[args.metric](a, b)
    out.write(f"metric={args.metric} method={method} value={value:.12g}")
    for k, v in meta.items():
        out.write(f" {k}={v:.12g}")
    out.write("\n")
    return 0


def _float_list(text):
    return tuple(float(x) for x in text.split(",") if x.strip())


def cmd_figure1(args, out):
    cfg = SweepConfig(
        r_values=_float_list(args.r) if args.r else SweepConfig.r_values,
        p_steps=args.p_steps,
        methods=tuple(m.strip() for m in args.methods.split(",")) if args.methods else METHODS,
        seed=args.seed,
        output_path=args.out,
    )
    text = figure1(cfg)
    if not args.out:
        out.write(text)
    return 0


def _dims(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError("--dims must look like lo..hi")
    lo, hi = int(lo), int(hi)
    if lo < 2 or hi < lo:
        raise UsageError("--dims needs 2 <= lo <= hi")
    return lo, hi


def cmd_verify(args, out):
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    results = run_all(args.trials, _dims(args.dims), args.seed)
    out.write(format_report(results))
    for r in results:
        if not r.ok:
            out.write(f"first failing property: {r.name}\n")
            return 1
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="qdist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("distance", help="distance between two state files")
    d.add_argument("--a", required=True)
    d.add_argument("--b", required=True)
    d.add_argument("--metric", choices=METRIC_NAMES, default="dn")
    d.add_argument("--method", choices=("closed",) + tuple(_PURIFY), default="closed")
    d.set_defaults(func=cmd_distance)

    f = sub.add_parser("figure1", help="D_N(rho, E_p(rho)) sweep as CSV")
    f.add_argument("--r", help="comma-separated Bloch norms")
    f.add_argument("--p-steps", type=int, default=101)
    f.add_argument("--methods", help=f"comma list from {','.join(METHODS)}")
    f.add_argument("--out")
    f.add_argument("--seed", type=int, default=None,
                   help="draw the Bloch direction at random (default: z axis)")
    f.set_defaults(func=cmd_figure1)

    v = sub.add_parser("verify", help="randomized property suites")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--dims", default="2..8")
    v.add_argument("--seed", type=int, default=42)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SupportViolation as exc:
        print(f"qdist: relative entropy undefined: {exc}", file=sys.stderr)
        return 3
    except (QdistError, UsageError, ValueError, OSError) as exc:
        print(f"qdist: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
