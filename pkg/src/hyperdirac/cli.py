"""Command-line entry point.

    hyperdirac spectrum --B 5 --m 1/2
    hyperdirac wavefunction --B 5 --m 1/2 --n 1 --part radial
    hyperdirac verify --suite all
    hyperdirac limit --B0 1 --rho 10 100 1000 --n 2
    hyperdirac geometry --r 1 --z 0.5

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import axial, geometry, radial, spectrum, verify
from .errors import HyperDiracError
from .records import OutputRecord
from .separation import PhysicalParams, half_integer

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _half(text: str) -> float:
    try:
        return float(half_integer(text))
    except HyperDiracError as exc:
        raise argparse.ArgumentTypeError(
            f"{exc}; write e.g. 1/2 or 0.5") from None


def _m_list(values) -> list[float]:
    out = []
    for v in values:
        out.extend(_half(part) for part in v.split(",") if part)
    return out


def _emit(record: OutputRecord, args) -> None:
    text = record.render(args.format)
    if args.output:
        path = Path(args.output)
        if not path.is_absolute():
            path = Path(os.environ.get("OUTPUT_DIR", ".")) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    if not args.B > 0:
        raise UsageError("--B must be positive")
    m_values = _m_list(args.m)
    rec = OutputRecord("spectrum", {"B": args.B, "m": m_values, "variant": args.variant},
                       ["variant", "m", "n", "lambda_sq", "constraint_margin"])
    for st in spectrum.enumerate_states(args.B, m_values):
        if args.variant != "both" and st.variant != int(args.variant):
            continue
        margin = args.B - radial.level_index(st.variant, st.m, st.n)
        rec.add(st.variant, st.m, st.n, st.lambda_sq, margin)
    _emit(rec, args)
    return EXIT_OK


def _grid(lo, hi, count) -> np.ndarray:
    if count < 2 or not hi > lo:
        raise UsageError("grid needs hi > lo and at least 2 points")
    return np.linspace(lo, hi, count)


def cmd_wavefunction(args) -> int:
    m = _half(args.m)
    state = radial.spectral_state(args.variant, args.B, m, args.n)
    params = {"B": args.B, "m": m, "n": args.n, "variant": args.variant, "part": args.part,
              "lambda_sq": state.lambda_sq}
    if args.part == "radial":
        r = _grid(args.r_lo, args.r_hi, args.r_count)
        spec = radial.spec_for_state(state, args.B)
        R1, R2 = radial.eval_R1(spec, args.n, r), radial.eval_R2(spec, args.n, state.lam, r)
        params.update(r_lo=args.r_lo, r_hi=args.r_hi, r_count=args.r_count)
        rec = OutputRecord("wavefunction", params, ["r", "R1", "R2"])
        for row in zip(r, R1, R2):
            rec.add(*map(float, row))
    else:
        phys = PhysicalParams(args.B, args.M, args.epsilon)
        p = args.branch * phys.p
        params.update(epsilon=args.epsilon, M=args.M, branch=args.branch, axial_variant=args.axial_variant,
                      z_lo=args.z_lo, z_hi=args.z_hi, z_count=args.z_count)
        z = _grid(args.z_lo, args.z_hi, args.z_count)
        if args.part == "axial":
            spec = axial.axial_spec(args.axial_variant, p, state.lam)
            Z1, Z2 = axial.eval_Z1(spec, z), axial.eval_Z2(spec, z)
            rec = OutputRecord("wavefunction", params, ["z", "Z1_re", "Z1_im", "Z2_re", "Z2_im"])
            for zi, a, b in zip(z, Z1, Z2):
                rec.add(float(zi), a.real, a.imag, b.real, b.imag)
        else:
            r = _grid(args.r_lo, args.r_hi, args.r_count)
            if r[0] <= 0:
                raise UsageError("--r-lo must be positive for the spinor (axis degeneracy)")
            params.update(r_lo=args.r_lo, r_hi=args.r_hi, r_count=args.r_count)
            fields = spectrum.assemble_fields(state, args.axial_variant, args.branch, phys)
            rr, zz = np.meshgrid(r, z, indexing="ij")
            vals = [f(rr, zz).ravel() for f in fields]
            cols = ["r", "z"] + [f"f{i}_{part}" for i in range(1, 5) for part in ("re", "im")]
            rec = OutputRecord("wavefunction", params, cols)
            for j, (ri, zi) in enumerate(zip(rr.ravel(), zz.ravel())):
                row = [float(ri), float(zi)]
                for v in vals:
                    row += [v[j].real, v[j].imag]
                rec.add(*row)
    _emit(rec, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(B=args.B, m_values=tuple(_m_list(args.m)), tol=args.tol)
    checks = verify.run(args.suite, cfg)
    rec = OutputRecord("verify", {"suite": args.suite, "B": args.B, "m": list(cfg.m_values), "tol": args.tol},
                       ["suite", "check", "value", "tolerance", "passed"])
    width = max((len(c.name) for c in checks), default=10)
    for c in checks:
        rec.add(c.suite, c.name, c.value, c.tol, c.passed)
        status = "ok" if c.passed else "FAIL"
        print(f"{c.suite:9s} {c.name:{width}s} {c.value:11.3e} < {c.tol:8.1e}  {status}")
    if cfg.shooting_rows:
        print("\nshooting oracle vs formula")
        print(f"{'m':>5s} {'variant':>7s} {'formula':>22s} {'shooting':>22s} {'rel_err':>10s}")
        for m, variant, formula, shot in cfg.shooting_rows:
            err = abs(shot - formula) / formula if shot is not None and not math.isnan(formula) else math.inf
            shot_s = f"{shot:22.12f}" if shot is not None else f"{'missing':>22s}"
            print(f"{m:5g} {variant:7d} {formula:22.12f} {shot_s} {err:10.2e}")
    if args.output:
        _emit(rec, args)
    failed = [c for c in checks if not c.passed]
    if failed:
        worst = max(failed, key=lambda c: c.value / c.tol)
        print(f"\nFAIL: {len(failed)} of {len(checks)} checks; worst {worst.suite} / {worst.name}: "
              f"{worst.value:.3e} >= {worst.tol:.1e}", file=sys.stderr)
        if args.tol is not None and args.tol < 1e-15:
            print("note: tolerances below ~1e-15 are below double-precision and finite-difference resolution",
                  file=sys.stderr)
        return EXIT_FAIL
    print(f"\nall {len(checks)} checks passed")
    return EXIT_OK


def cmd_limit(args) -> int:
    m = _half(args.m)
    rec = OutputRecord("limit", {"B0": args.B0, "rho": args.rho, "n": args.n, "m": m, "variant": args.variant},
                       ["rho", "lambda0_sq_curved", "lambda0_sq_flat", "rel_error"])
    for rho in args.rho:
        if not rho > 0:
            raise UsageError("--rho values must be positive")
        curved, flat, err = spectrum.flat_limit_check(args.B0, args.n, m, args.variant, rho)
        rec.add(float(rho), curved, flat, err)
    _emit(rec, args)
    return EXIT_OK


def cmd_geometry(args) -> int:
    pt = geometry.CylindricalPoint(args.t, args.r, args.phi, args.z)
    rec = OutputRecord("geometry", {"t": args.t, "r": args.r, "phi": args.phi, "z": args.z, "B": args.B},
                       ["quantity", "value"])
    u = geometry.embed(pt)
    for name in ("u0", "u1", "u2", "u3"):
        rec.add(name, getattr(u, name))
    g = geometry.metric_at(pt)
    for name in ("g_tt", "g_rr", "g_phiphi", "g_zz"):
        rec.add(name, getattr(g, name))
    rec.add("A_phi", geometry.vector_potential(pt, args.B))
    if pt.r > 0:
        for label, leg in zip(("e_t", "e_r", "e_phi", "e_z"), geometry.tetrad_at(pt)):
            rec.add(label, float(leg))
        con = geometry.christoffel_at(pt)
        names = "t r phi z".split()
        for a, b, c in zip(*np.nonzero(con.christoffel)):
            if b <= c:
                rec.add(f"Gamma^{names[a]}_{names[b]}{names[c]}", float(con.christoffel[a, b, c]))
        rec.add("gamma_122", con.gamma_122)
        rec.add("gamma_311", con.gamma_311)
        rec.add("gamma_322", con.gamma_322)
    _emit(rec, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperdirac", description="Dirac particle in a magnetic field on H3")
    sub = ap.add_subparsers(dest="command", required=True)

    def io_flags(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="file name; relative paths go under $OUTPUT_DIR")

    p = sub.add_parser("spectrum", help="quantized lambda^2 table")
    p.add_argument("--B", type=float, required=True)
    p.add_argument("--m", nargs="+", required=True, help="half-integers, e.g. 1/2 3/2 or 1/2,-1/2")
    p.add_argument("--variant", choices=("3", "4", "both"), default="both")
    io_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunction", help="sampled radial, axial or spinor solution")
    p.add_argument("--B", type=float, required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", type=int, choices=(3, 4), default=3)
    p.add_argument("--part", choices=("radial", "axial", "spinor"), default="radial")
    p.add_argument("--axial-variant", type=int, choices=(1, 2, 3, 4), default=1)
    p.add_argument("--branch", type=int, choices=(1, -1), default=1)
    p.add_argument("--epsilon", type=float, default=5.0)
    p.add_argument("--M", type=float, default=3.0)
    p.add_argument("--r-lo", type=float, default=0.1)
    p.add_argument("--r-hi", type=float, default=8.0)
    p.add_argument("--r-count", type=int, default=81)
    p.add_argument("--z-lo", type=float, default=-5.0)
    p.add_argument("--z-hi", type=float, default=5.0)
    p.add_argument("--z-count", type=int, default=101)
    io_flags(p)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("verify", help="run oracle suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--tol", type=float, default=None, help="override every tolerance")
    p.add_argument("--B", type=float, default=5.0)
    p.add_argument("--m", nargs="+", default=["1/2"])
    io_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limit", help="flat-space limit table")
    p.add_argument("--B0", type=float, required=True)
    p.add_argument("--rho", type=float, nargs="+", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", default="1/2")
    p.add_argument("--variant", type=int, choices=(3, 4), default=3)
    io_flags(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("geometry", help="embedding, metric, tetrad and connection at a point")
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--z", type=float, default=0.0)
    p.add_argument("--B", type=float, default=1.0)
    io_flags(p)
    p.set_defaults(func=cmd_geometry)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
    except (UsageError, HyperDiracError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
