"""Command-line front end: sweeps and reproduction artifacts as CSV/JSON.

Subcommands: pendular | pair | thermal-map | table1 | fit | molecule.
All numeric output uses 10-significant-digit formatting so identical
invocations produce byte-identical files.

Exit codes: 0 success, 2 IO failure, 3 fit failure, 4 lookup failure,
5 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import entanglement, fitting, spectroscopy, units
from .errors import (
    ConvergenceFailure,
    LinearityCheckFailed,
    MaxIterations,
    MoleculeNotFound,
    NoOnsetFound,
    RootNotBracketed,
    SingularNormalMatrix,
)
from .pair import PairConfig, diagonalize_pair
from .rotor import BasisTruncation, cosine_elements, solve_pendular

COEFF_COUNT = 7  # emit spherical-harmonic coefficients a0..a6, b0..b6


def _fmt(value: float) -> str:
    return f"{float(value):.10g}"


def _parse_range(spec: str) -> np.ndarray:
    try:
        start, stop, points = spec.split(":")
        start, stop, points = float(start), float(stop), int(points)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"range must be start:stop:points, got {spec!r}") from exc
    if points < 2 or not start < stop:
        raise argparse.ArgumentTypeError("range requires start < stop and points >= 2")
    return np.linspace(start, stop, points)


def _truncation(args) -> BasisTruncation:
    j_max = args.jmax or int(os.environ.get("PENDULAR_JMAX", 20))
    return BasisTruncation(j_max=j_max)


def _write_lines(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_pendular(args) -> int:
    trunc = _truncation(args)
    header = (
        ["x", "W0", "W1", "dW", "C0", "CX", "C1", "dC"]
        + [f"a{j}" for j in range(COEFF_COUNT)]
        + [f"b{j}" for j in range(COEFF_COUNT)]
    )
    lines = [",".join(header)]
    for x in args.range:
        states = solve_pendular(x, trunc)
        ce = cosine_elements(x, trunc)
        a = states[0].coefficients[:COEFF_COUNT]
        b = states[1].coefficients[:COEFF_COUNT]
        row = [
            x,
            states[0].energy,
            states[1].energy,
            states[1].energy - states[0].energy,
            ce.c0,
            ce.cx,
            ce.c1,
            ce.c0 - ce.c1,
            *a,
            *b,
        ]
        lines.append(",".join(_fmt(v) for v in row))
    _write_lines(args.out, lines)
    return 0


def cmd_pair(args) -> int:
    trunc = _truncation(args)
    xprime = args.xprime if args.xprime is not None else args.x
    lines = [",".join([args.sweep, "E1", "E2", "E3", "E4", "C1", "C2", "C3", "C4", "dw"])]
    for value in args.range:
        if args.sweep == "y":
            cfg = PairConfig(x=args.x, x_prime=xprime, y=value,
                             alpha=np.deg2rad(args.alpha_deg))
        else:
            cfg = PairConfig(x=args.x, x_prime=xprime, y=args.y,
                             alpha=np.deg2rad(value))
        eig = diagonalize_pair(cfg, trunc)
        conc = entanglement.eigenstate_concurrences(cfg, trunc)
        dw = spectroscopy.delta_omega(cfg, trunc)
        lines.append(",".join(_fmt(v) for v in [value, *eig.energies, *conc, dw]))
    _write_lines(args.out, lines)
    return 0


def cmd_thermal_map(args) -> int:
    trunc = _truncation(args)
    if args.critical:
        lines = ["x,z,y0"]
        for x in args.xrange:
            for z in args.zrange:
                y0 = entanglement.critical_coupling(x, z, trunc)
                lines.append(",".join(_fmt(v) for v in [x, z, y0]))
    else:
        lines = ["y,z,C12"]
        for y in args.yrange:
            cfg = PairConfig(x=args.x, x_prime=args.x, y=y)
            for z in args.zrange:
                c12 = entanglement.thermal_concurrence(cfg, z, trunc)
                lines.append(",".join(_fmt(v) for v in [y, z, c12]))
    _write_lines(args.out, lines)
    return 0


TABLE1_CASES = [(1.0, [1.01, 1.10]), (3.0, [3.03, 3.30])]
TABLE1_OMEGA_ALPHA = 1e-5


def cmd_table1(args) -> int:
    trunc = _truncation(args)
    lines = ["x,xprime,W_gap,C0,C1,dC,w1_minus_w3,delta_omega,C12"]
    text = []
    for x, xprimes in TABLE1_CASES:
        report = spectroscopy.cnot_report(x, xprimes, TABLE1_OMEGA_ALPHA, trunc, fitted=True)
        base = report["control"]
        lines.append(
            ",".join(
                [_fmt(x), _fmt(x), _fmt(base["w_gap"]), _fmt(base["c0"]),
                 _fmt(base["c1"]), _fmt(base["dc"]), "", "", ""]
            )
        )
        text.append(f"x = {x:g}  (Omega_alpha/B = {TABLE1_OMEGA_ALPHA:g})")
        text.append(
            f"  control site: (W1-W0)/B = {base['w_gap']:.4f}  "
            f"C0 = {base['c0']:.5f}  C1 = {base['c1']:.5f}  C0-C1 = {base['dc']:.5f}"
        )
        for col in report["targets"]:
            lines.append(
                ",".join(
                    [_fmt(x), _fmt(col["x"]), _fmt(col["w_gap"]), _fmt(col["c0"]),
                     _fmt(col["c1"]), _fmt(col["dc"]), _fmt(col["w1_minus_w3"]),
                     _fmt(col["delta_omega"]), _fmt(col["c12"])]
                )
            )
            text.append(
                f"  x' = {col['x']:g}: (W1-W0)/B = {col['w_gap']:.4f}  "
                f"C0 = {col['c0']:.5f}  C1 = {col['c1']:.5f}  C0-C1 = {col['dc']:.5f}  "
                f"(w1-w3)/B = {col['w1_minus_w3']:.3e}  dw/B = {col['delta_omega']:.3e}  "
                f"C12 = {col['c12']:.3e}"
            )
    _write_lines(args.out, lines)
    if args.out not in (None, "-"):
        sys.stdout.write("\n".join(text) + "\n")
    return 0


def cmd_fit(args) -> int:
    trunc = _truncation(args)
    model = fitting.ModelFamily[args.model]
    data = fitting.exact_curve(model, fitting.default_grid(model), trunc)
    result = fitting.levenberg_marquardt(data, model, fitting.DEFAULT_START[model])
    payload = {
        "model": model.label,
        "params": [float(v) for v in result.parameters],
        "ci": [float(v) for v in result.confidence_half_widths],
        "chi2": result.chi_square,
        "r2": result.r_squared,
        "iterations": result.iterations,
        "converged": result.converged,
    }
    _write_lines(args.out, [json.dumps(payload, indent=2)])
    return 0


def cmd_molecule(args) -> int:
    config = units.load_config(args.config) if args.config else None
    entry = units.lookup(args.name, config)
    if entry.spec is None:
        raise MoleculeNotFound(
            f"{args.name}: constants not published; supply them via --config "
            f"(cited reduced coupling y = {entry.cited_y:g})"
        )
    spec = entry.spec
    triple = units.to_reduced(spec, args.field, args.temperature)
    trunc = _truncation(args)
    x = triple.x
    xp = args.xprime if args.xprime is not None else 1.01 * x
    omega_alpha = args.omega_alpha if args.omega_alpha is not None else triple.y
    cfg = PairConfig(x=x, x_prime=xp, y=omega_alpha)
    dw = spectroscopy.delta_omega(cfg, trunc)
    payload = {
        "molecule": spec.name,
        "x": triple.x,
        "y": triple.y,
        "z": triple.z,
        "x_prime": xp,
        "omega_alpha": omega_alpha,
        "delta_omega_over_b": dw,
        "delta_omega_khz": dw * spec.rotational_constant * units.KHZ_PER_WAVENUMBER,
    }
    _write_lines(args.out, [json.dumps(payload, indent=2)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pendular",
        description="Pendular-state qubits: entanglement and CNOT frequency shifts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--jmax", type=int, default=None, help="basis cutoff override")
        p.add_argument("--out", default=None, help="output path ('-' for stdout)")

    p = sub.add_parser("pendular", help="sweep the single-molecule solution over x")
    p.add_argument("--range", type=_parse_range, required=True, metavar="a:b:n")
    common(p)
    p.set_defaults(func=cmd_pendular)

    p = sub.add_parser("pair", help="pair eigensystem sweep over y or alpha")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--xprime", type=float, default=None)
    p.add_argument("--y", type=float, default=1.0)
    p.add_argument("--alpha-deg", type=float, default=90.0)
    p.add_argument("--sweep", choices=["y", "alpha"], default="y")
    p.add_argument("--range", type=_parse_range, required=True, metavar="a:b:n")
    common(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("thermal-map", help="thermal concurrence or onset grids")
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--yrange", type=_parse_range, default=None, metavar="a:b:n")
    p.add_argument("--zrange", type=_parse_range, required=True, metavar="a:b:n")
    p.add_argument("--xrange", type=_parse_range, default=None, metavar="a:b:n")
    p.add_argument("--critical", action="store_true",
                   help="emit critical coupling y0 over (x, z) instead of C12 over (y, z)")
    common(p)
    p.set_defaults(func=cmd_thermal_map)

    p = sub.add_parser("table1", help="CNOT feasibility table reproduction")
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("fit", help="regenerate a reduced-variable fit")
    p.add_argument("--model", required=True,
                   choices=[m.name for m in fitting.ModelFamily])
    common(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("molecule", help="reduced variables and shift for a molecule")
    p.add_argument("--name", required=True)
    p.add_argument("--config", default=None, help="JSON molecule constants file")
    p.add_argument("--field", type=float, required=True, help="field strength (kV/cm)")
    p.add_argument("--temperature", type=float, default=0.0, help="temperature (K)")
    p.add_argument("--xprime", type=float, default=None)
    p.add_argument("--omega-alpha", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_molecule)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SingularNormalMatrix, MaxIterations) as exc:
        print(f"fit error: {exc}", file=sys.stderr)
        return 3
    except MoleculeNotFound as exc:
        print(f"lookup error: {exc}", file=sys.stderr)
        return 4
    except (ConvergenceFailure, LinearityCheckFailed, NoOnsetFound, RootNotBracketed) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
