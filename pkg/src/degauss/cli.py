"""Command-line front end: single-point evaluation, deterministic CSV
grid sweeps, and the self-verification battery.

CSV schema (12 significant digits, LF line endings):
    lambda,k,l,op,E,E_norm,N,eta,G,alpha,beta,gamma,nu_plus,nu_minus
with a trailing `continuous` column (value 1) only in continuous mode.
"""

import argparse
import math
import os
import sys
import tempfile

from . import entanglement as ent
from . import gaussian as gl
from . import states as st
from . import verify
from .oracle import CutoffLeakageError
from .special import ConvergenceError

COLUMNS = ["lambda", "k", "l", "op", "E", "E_norm", "N", "eta", "G",
           "alpha", "beta", "gamma", "nu_plus", "nu_minus"]


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    return f"{x:.12g}"


def _evaluate_point(lam, k, l, op, base, epsilon, continuous):
    build = st.build_added if op == "add" else st.build_subtracted
    state = build(lam, k, l, epsilon=epsilon, base=base,
                  continuous=continuous)
    report = ent.entanglement_report(state)
    cov = gl.covariance_direct(state)
    nu = gl.symplectic_eigenvalues(cov)
    g_val = gl.non_gaussianity(state)
    return [lam, k, l, op, report.entropy, report.enhancement,
            report.mean_photons, report.efficiency, g_val,
            cov.alpha, cov.beta, cov.gamma, nu.nu_plus, nu.nu_minus]


def _parse_range(text):
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"range must be A:B or A:B:S, got {text!r}")
    lo, hi = float(parts[0]), float(parts[1])
    step = float(parts[2]) if len(parts) == 3 else 1.0
    if step <= 0 or hi < lo:
        raise ValueError(f"empty or descending range {text!r}")
    vals = []
    v = lo
    while v <= hi + 1e-9:
        vals.append(round(v, 12))
        v += step
    return vals


def _parse_constraint(text):
    t = text.replace(" ", "")
    if t == "k=l":
        return lambda k, l: abs(k - l) < 1e-9
    if t.startswith("k+l="):
        total = float(t[4:])
        return lambda k, l: abs(k + l - total) < 1e-9
    if t.startswith("l="):
        l0 = float(t[2:])
        return lambda k, l: abs(l - l0) < 1e-9
    raise ValueError(f"unknown constraint {text!r} "
                     "(expected k=l, k+l=T or l=L0)")


def _base_arg(text):
    if text == "e":
        return "e"
    if text == "2":
        return 2
    raise argparse.ArgumentTypeError("base must be 2 or e")


def cmd_point(args):
    row = _evaluate_point(args.lam, args.k, args.l, args.op, args.base,
                          args.epsilon, args.continuous)
    cols = COLUMNS + (["continuous"] if args.continuous else [])
    if args.continuous:
        row = row + [1]
    sys.stdout.write(",".join(cols) + "\n")
    sys.stdout.write(",".join(_fmt(v) for v in row) + "\n")
    return 0


def cmd_sweep(args):
    lambdas = [float(s) for s in args.lam.split(",")]
    for lam in lambdas:
        if not 0.0 <= lam < 1.0:
            raise ValueError(f"lambda must be in [0, 1), got {lam}")
    k_vals = _parse_range(args.k_range)
    l_vals = _parse_range(args.l_range)
    keep = _parse_constraint(args.constraint) if args.constraint \
        else (lambda k, l: True)
    ops = ["add", "sub"] if args.op == "both" else [args.op]

    points = sorted((lam, op, k, l)
                    for lam in lambdas for op in ops
                    for k in k_vals for l in l_vals if keep(k, l))
    if not points:
        raise ValueError("sweep grid is empty")

    rows = [_evaluate_point(lam, k, l, op, args.base, args.epsilon,
                            args.continuous)
            for (lam, op, k, l) in points]

    cols = COLUMNS + (["continuous"] if args.continuous else [])
    lines = [",".join(cols)]
    for row in rows:
        if args.continuous:
            row = row + [1]
        lines.append(",".join(_fmt(v) for v in row))
    payload = "\n".join(lines) + "\n"

    # all points evaluated before any output exists: a failure above
    # leaves no partial file behind
    out_dir = os.path.dirname(os.path.abspath(args.out)) or "."
    fd, tmp_path = tempfile.mkstemp(dir=out_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(payload)
        os.replace(tmp_path, args.out)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    return 0


def cmd_verify(args):
    ok = verify.run_checks(level=args.level)
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="degauss",
        description="Photon-added/subtracted two-mode squeezed vacuum: "
                    "entanglement, efficiency and non-Gaussianity.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--base", type=_base_arg, default=2,
                        help="entropy log base: 2 (default) or e")
        sp.add_argument("--epsilon", type=float, default=st.DEFAULT_EPSILON,
                        help="truncation tolerance on the unsummed mass")
        sp.add_argument("--continuous", action="store_true",
                        help="allow fractional operation counts "
                             "(Gamma-extended, non-physical)")

    sp = sub.add_parser("point", help="evaluate one (lambda, k, l) point")
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--k", type=float, required=True)
    sp.add_argument("--l", type=float, required=True)
    sp.add_argument("--op", choices=["add", "sub"], required=True)
    common(sp)
    sp.set_defaults(func=cmd_point)

    sp = sub.add_parser("sweep", help="grid sweep to a CSV file")
    sp.add_argument("--lambda", dest="lam", required=True,
                    help="comma-separated list of lambda values")
    sp.add_argument("--op", choices=["add", "sub", "both"], default="both")
    sp.add_argument("--k-range", required=True, metavar="A:B[:S]")
    sp.add_argument("--l-range", required=True, metavar="A:B[:S]")
    sp.add_argument("--constraint", default=None,
                    help="k=l, k+l=T or l=L0")
    sp.add_argument("--out", required=True, help="output CSV path")
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="run the self-check battery")
    sp.add_argument("--level", choices=["fast", "full"], default="fast")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ConvergenceError, CutoffLeakageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
