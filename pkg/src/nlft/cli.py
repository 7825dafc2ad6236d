"""Command-line front end.

Exit codes: 0 success, 2 when a well-formed input is not in the image of the
transform (or not a constant-mass comb), 1 for I/O and validation errors.
Tolerances come from flags, then ``NLFT_TOL_EPS_F`` / ``_EPS_C`` /
``_EPS_PEEL`` / ``_EPS_MEMBER``, then the library defaults.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import exppoly, generate, nlft_d, nlft_dual, nlft_e, oracle
from . import serialize as ser
from .errors import NLFTError, NotInImage

DEFAULT_TOLS = {
    "eps_f": exppoly.EPS_F,
    "eps_c": exppoly.EPS_C,
    "eps_peel": nlft_d.EPS_PEEL,
    "eps_member": nlft_d.EPS_MEMBER,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems are validation errors (exit 1); 2 is reserved for NotInImage
    def error(self, message):
        raise UsageError(message)


def tolerances(args) -> dict:
    out = {}
    for name, default in DEFAULT_TOLS.items():
        val = getattr(args, name, None)
        if val is None:
            env = os.environ.get("NLFT_TOL_" + name.upper())
            val = float(env) if env else default
        out[name] = val
    return out


def _z_grid(text: str) -> np.ndarray:
    try:
        start, stop, num = text.split(":")
        return np.linspace(float(start), float(stop), int(num))
    except ValueError as exc:
        raise UsageError(f"--z expects START:STOP:NUM, got {text!r}") from exc


def _load_reduced(path) -> exppoly.ExpMat:
    m, form = ser.expmat_from_json(ser.read_json(path))
    if form == "full":
        m = nlft_d.reduce_d(m)
    elif form != "reduced":
        raise ValueError(f"unknown ExpMat form {form!r}")
    return m


def cmd_gen(args, tol):
    if args.kind == "delta":
        obj = ser.dist_to_json(generate.random_delta(_need(args, "N"), args.seed))
    elif args.kind == "signal":
        obj = ser.signal_to_json(generate.random_signal(_need(args, "N"), args.seed))
    else:
        obj = ser.gaps_to_json(generate.random_gaps(_need(args, "M"), args.seed))
    ser.write_json(obj, args.output)


def cmd_forward_d(args, tol):
    dist = ser.dist_from_json(ser.read_json(args.input))
    m = nlft_d.forward_d(dist, tol["eps_f"], tol["eps_c"])
    if args.reduced:
        ser.write_json(ser.expmat_to_json(nlft_d.reduce_d(m), "reduced"), args.output)
    else:
        ser.write_json(ser.expmat_to_json(m, "full"), args.output)


def cmd_inverse_d(args, tol):
    m = _load_reduced(args.input)
    fn = nlft_d.inverse_d_weighted if args.weighted else nlft_d.inverse_d
    dist = fn(m, args.N_max, eps_peel=tol["eps_peel"], eps_member=tol["eps_member"],
              eps_f=tol["eps_f"], eps_c=tol["eps_c"])
    ser.write_json(ser.dist_to_json(dist), args.output)


def cmd_forward_e(args, tol):
    u = ser.signal_from_json(ser.read_json(args.input))
    ser.write_json(ser.grid_to_json(nlft_e.forward_e(u)), args.output)


def cmd_inverse_e(args, tol):
    g = ser.grid_from_json(ser.read_json(args.input))
    ser.write_json(ser.signal_to_json(nlft_e.inverse_e(g)), args.output)


def cmd_dual_forward(args, tol):
    xi = ser.gaps_from_json(ser.read_json(args.input))
    ser.write_json(ser.constmass_job_to_json(nlft_dual.constmass_samples(xi)), args.output)


def cmd_dual_inverse(args, tol):
    g = ser.constmass_job_from_json(ser.read_json(args.input))
    xi = nlft_dual.inverse_dual_constmass(g, eps_member=tol["eps_member"])
    ser.write_json(ser.gaps_to_json(xi, with_positions=True), args.output)


def _report_membership(member: bool, output) -> int:
    ser.write_json({"member": member}, output)
    return 0 if member else 2


def cmd_check_d(args, tol):
    m = _load_reduced(args.input)
    return _report_membership(
        nlft_d.membership_d(m, args.N, tol["eps_peel"], tol["eps_member"], tol["eps_f"], tol["eps_c"]),
        args.output,
    )


def cmd_check_e(args, tol):
    g = ser.grid_from_json(ser.read_json(args.input))
    return _report_membership(nlft_e.membership_e(g, tol["eps_member"]), args.output)


def cmd_strata(args, tol):
    count = nlft_e.stratum_count(args.N, args.k, args.l)
    print(f"#D_{2 * args.k - 1}({args.l}) for N={args.N}: {count} (≈{_short_sci(count)})")


def _short_sci(n: int) -> str:
    if n == 0:
        return "0"
    mant, exp = f"{n:.1e}".split("e")
    return f"{mant}e{int(exp)}"


def cmd_complexity(args, tol):
    full, modified, diff = nlft_dual.complexity_report(args.N)
    print(f"N={args.N} full={full:.6g} modified={modified:.6g} difference={diff:.6g}")


def cmd_oracle(args, tol):
    if args.check == "dyson-e":
        u = ser.signal_from_json(ser.read_json(args.input))
        g = nlft_e.forward_e(u)
        dev = max(
            max(abs(q.a - g.a[z]), abs(q.b - g.b[z]))
            for z in range(g.N)
            for q in [oracle.dyson_product_e(u, z)]
        )
        ser.write_json({"check": "dyson-e", "N": g.N, "max_deviation": dev}, args.output)
    elif args.check == "dyson-d":
        dist = ser.dist_from_json(ser.read_json(args.input))
        fast = nlft_d.reduce_d(nlft_d.forward_d(dist))
        slow = oracle.dyson_delta_d(dist)
        dev = exppoly.ep_coeff_norm(exppoly.ep_sub(fast.a, slow.a)) + exppoly.ep_coeff_norm(
            exppoly.ep_sub(fast.b, slow.b))
        ser.write_json({"check": "dyson-d", "N": len(dist), "coeff_deviation": dev}, args.output)
    elif args.check in ("step", "gauge"):
        dist = ser.dist_from_json(ser.read_json(args.input))
        prof = oracle.StepProfile(dist, args.eps)
        rows = []
        for z in _z_grid(args.z):
            if args.check == "step":
                s, f = oracle.step_transform(prof, z), nlft_d.forward_d(dist)(z)
            else:
                s, f = oracle.gauge_check(prof, int(round(z)))
            rows.append({"z": float(z), "deviation": float(np.hypot(abs(s.a - f.a), abs(s.b - f.b)))})
        ser.write_json({"check": args.check, "epsilon": args.eps, "rows": rows}, args.output)
    else:
        d = 2 * args.k - 1
        found = len(oracle.enumerate_stratum(args.N, d, args.l))
        ser.write_json({"check": "stratum", "N": args.N, "d": d, "l": args.l,
                        "enumerated": found,
                        "formula": nlft_e.stratum_count(args.N, args.k, args.l)}, args.output)


def cmd_sample(args, tol):
    data = ser.read_json(args.input)
    if "samples" in data:
        g = ser.grid_from_json(data)
        zs, a, b = np.arange(g.N, dtype=float), g.a, g.b
    else:
        m, _ = ser.expmat_from_json(data)
        zs = _z_grid(args.z)
        a, b = exppoly.em_eval_many(m, zs)
    out = open(args.output, "w", newline="") if args.output not in (None, "-") else sys.stdout
    try:
        w = csv.writer(out)
        w.writerow(["z", "re_a", "im_a", "re_b", "im_b"])
        for row in zip(zs, a.real, a.imag, b.real, b.imag):
            w.writerow([repr(float(v)) for v in row])
    finally:
        if out is not sys.stdout:
            out.close()


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name} is required for this command")
    return val


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nlft", description="Discrete nonlinear Fourier transforms and their inverses")
    tol = _Parser(add_help=False)
    for name in DEFAULT_TOLS:
        tol.add_argument("--" + name.replace("_", "-"), dest=name, type=float, default=None)
    io = _Parser(add_help=False)
    io.add_argument("-i", "--input", default="-")
    io.add_argument("-o", "--output", default="-")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="write a seeded random instance")
    s.add_argument("--kind", choices=["delta", "signal", "constmass"], required=True)
    s.add_argument("--N", type=int)
    s.add_argument("--M", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("forward-d", parents=[io, tol], help="delta comb -> ExpMat")
    s.add_argument("--reduced", action="store_true", help="emit the reduced transform")
    s.set_defaults(func=cmd_forward_d)

    s = sub.add_parser("inverse-d", parents=[io, tol], help="ExpMat -> delta comb")
    s.add_argument("--N-max", dest="N_max", type=int, default=64)
    s.add_argument("--weighted", action="store_true", help="divide weights by the gaps")
    s.set_defaults(func=cmd_inverse_d)

    s = sub.add_parser("forward-e", parents=[io, tol], help="signal -> grid")
    s.set_defaults(func=cmd_forward_e)
    s = sub.add_parser("inverse-e", parents=[io, tol], help="grid -> signal")
    s.set_defaults(func=cmd_inverse_e)
    s = sub.add_parser("dual-forward", parents=[io, tol], help="gaps -> constant-mass samples")
    s.set_defaults(func=cmd_dual_forward)
    s = sub.add_parser("dual-inverse", parents=[io, tol], help="constant-mass samples -> gaps")
    s.set_defaults(func=cmd_dual_inverse)

    s = sub.add_parser("check-d", parents=[io, tol], help="membership test for an ExpMat")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_check_d)
    s = sub.add_parser("check-e", parents=[io, tol], help="membership test for a grid")
    s.set_defaults(func=cmd_check_e)

    s = sub.add_parser("strata", help="exact stratum size")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.set_defaults(func=cmd_strata)

    s = sub.add_parser("complexity", help="operation-count comparison")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("oracle", parents=[io, tol], help="brute-force cross-checks")
    s.add_argument("check", choices=["dyson-e", "dyson-d", "step", "gauge", "stratum"])
    s.add_argument("--eps", type=float, default=1e-3)
    s.add_argument("--z", default="0:8:9")
    s.add_argument("--N", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("sample", parents=[io], help="CSV of matrix entries over z")
    s.add_argument("--z", default="-2:2:401", help="START:STOP:NUM (ExpMat input only)")
    s.set_defaults(func=cmd_sample)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "oracle" and args.check == "stratum":
            for name in ("N", "k", "l"):
                _need(args, name)
        rc = args.func(args, tolerances(args))
        return rc or 0
    except NotInImage as exc:
        print(f"nlft: not in image: {exc}", file=sys.stderr)
        return 2
    except (UsageError, NLFTError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"nlft: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
