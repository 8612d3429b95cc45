"""Command-line surface: curve galleries, spectrum tables, wavefunction dumps,
sigma/mass fitting, and analytic-vs-finite-difference oracle comparisons.

Output files are deterministic: identical invocations produce byte-identical
CSV/JSON/SVG (numbers at 10 significant digits, no timestamps).

Exit codes: 0 success, 2 invalid flags, 3 write failure, 4 fit failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import fdsolver, geometry, polyene, quantum, specfun, svgplot
from .quantum import DEFAULT_UNITS

__all__ = ["main", "build_parser"]


def _num(v: float) -> str:
    return f"{v:.10g}"


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _csv(header: str, rows: list[list[str]], comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in (comments or [])]
    lines.append(header)
    lines.extend(",".join(r) for r in rows)
    return "\n".join(lines) + "\n"


# --- curve ----------------------------------------------------------------


def cmd_curve(args: argparse.Namespace) -> int:
    if not (0.0 < args.s_min < args.s_max):
        return _fail("need 0 < --s-min < --s-max", 2)
    if args.samples < 2:
        return _fail("--samples must be at least 2", 2)
    sigma, p = args.sigma, args.p
    if p in (0.5, 1.0):
        # closed forms, centered on the spiral's focal point
        if args.spacing == "log":
            s_vals = geometry.log_spaced(args.s_min, args.s_max, args.samples)
        else:
            s_vals = np.linspace(args.s_min, args.s_max, args.samples)
        if p == 1.0:
            samples = geometry.sample_polyene_curve(sigma, s_vals)
        else:
            samples = geometry.sample_hydrogen_curve(sigma, s_vals)
    else:
        law = geometry.CurvatureLaw(sigma, p)
        samples = geometry.frenet_integrate(law.k, args.s_min, args.s_max, args.samples - 1)
    if args.format == "svg":
        _write(args.output, svgplot.curve_svg(samples.points))
    else:
        rows = [
            [_num(s), _num(x), _num(y)]
            for s, (x, y) in zip(samples.s_values, samples.points)
        ]
        _write(args.output, _csv("s,x,y", rows, [f"sigma = {_num(sigma)}", f"p = {_num(p)}"]))
    return 0


# --- spectrum ---------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.sigma <= 0 or args.length <= 0 or args.mass <= 0 or args.levels < 0:
        return _fail("--sigma, --length, --mass must be positive; --levels >= 0", 2)
    omega = quantum.omega_from_sigma(args.sigma)
    if args.levels == 0:
        levels: list[tuple[int, float, float]] = []
    else:
        spec = quantum.spiral_box_spectrum(args.sigma, args.length, args.mass, args.levels)
        levels = [(n, spec.zero(n), spec.energy(n)) for n in range(1, args.levels + 1)]
    if args.format == "json":
        payload = {
            "sigma": args.sigma,
            "omega": omega,
            "box_length": args.length,
            "mass": args.mass,
            "levels": [
                {
                    "n": n,
                    "bessel_zero": j,
                    "energy_hartree": e,
                    "energy_ev": DEFAULT_UNITS.hartree_to_ev(e),
                }
                for n, j, e in levels
            ],
        }
        _write(args.output, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        rows = [
            [str(n), _num(j), _num(e), _num(DEFAULT_UNITS.hartree_to_ev(e))]
            for n, j, e in levels
        ]
        _write(
            args.output,
            _csv(
                "n,bessel_zero,energy_hartree,energy_ev",
                rows,
                [f"sigma = {_num(args.sigma)}", f"omega = {_num(omega)}"],
            ),
        )
    return 0


# --- wavefunction -----------------------------------------------------------


def cmd_wavefunction(args: argparse.Namespace) -> int:
    if args.sigma <= 0 or args.length <= 0 or args.mass <= 0 or args.level < 1:
        return _fail("--sigma, --length, --mass must be positive; --level >= 1", 2)
    if args.samples < 2:
        return _fail("--samples must be at least 2", 2)
    spec = quantum.spiral_box_spectrum(args.sigma, args.length, args.mass, args.level)
    s_vals = np.linspace(0.0, args.length, args.samples)
    rows = [
        [_num(s), _num(quantum.spiral_box_wavefunction(spec, args.level, float(s)))]
        for s in s_vals
    ]
    _write(
        args.output,
        _csv(
            "s,psi",
            rows,
            [
                f"sigma = {_num(args.sigma)}",
                f"omega = {_num(spec.omega)}",
                f"n = {args.level}",
            ],
        ),
    )
    return 0


# --- oracle -----------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.omega < 0 or args.length <= 0 or args.levels < 1 or args.grid < 10:
        return _fail("need --omega >= 0, --length > 0, --levels >= 1, --grid >= 10", 2)
    omega, length = args.omega, args.length
    if args.mode == "effective":
        coeff = omega * omega - 0.25
        refined = fdsolver.richardson_refine(
            lambda s: coeff / (s * s), length, args.levels, args.grid
        )
        rows = []
        for n in range(1, args.levels + 1):
            analytic = (specfun.bessel_j_zero(omega, n) / length) ** 2
            fd = float(refined[n - 1])
            rows.append([str(n), _num(analytic), _num(fd), _num(abs(fd / analytic - 1.0))])
        _write(
            args.output,
            _csv(
                "n,analytic_epsilon,fd_epsilon,relative_error",
                rows,
                [f"omega = {_num(omega)}", "potential = (omega^2 - 1/4) / s^2"],
            ),
        )
    else:
        # curvature potential taken at face value: attractive 1/s^2, which is
        # supercritical for sigma < 1 -- the ground level dives as the grid
        # refines instead of converging
        sigma = 1.0 / math.sqrt(1.0 + 4.0 * omega * omega)
        coeff = -1.0 / (4.0 * sigma * sigma)
        rows = []
        for factor in (1, 2, 4):
            n_grid = args.grid * factor
            op = fdsolver.discretize(lambda s: coeff / (s * s), length, n_grid)
            ground = float(fdsolver.eigenvalues_lowest(op, 1)[0])
            rows.append([str(n_grid), _num(ground)])
        _write(
            args.output,
            _csv(
                "grid_points,ground_epsilon",
                rows,
                [
                    f"omega = {_num(omega)} sigma = {_num(sigma)}",
                    "potential = -1 / (4 sigma^2 s^2): unbounded below, no grid limit",
                ],
            ),
        )
    return 0


# --- fit / report -----------------------------------------------------------


def _emit_fit_table(
    rows: list[polyene.FitResult],
    mols: list[polyene.Molecule],
    args: argparse.Namespace,
) -> None:
    masses = None
    if args.effective_mass:
        masses = [
            polyene.fit_effective_mass(m) if m.lambda_exp is not None else None for m in mols
        ]
    polyene.write_report_csv(rows, args.output, effective_masses=masses)
    if args.svg:
        _write(args.svg, svgplot.report_bar_chart(rows))


def cmd_fit(args: argparse.Namespace) -> int:
    mols = polyene.load_molecules(args.molecules)
    rows: list[polyene.FitResult] = []
    kept: list[polyene.Molecule] = []
    all_converged = True
    for mol in mols:
        if mol.lambda_exp is None:
            print(
                f"warning: {mol.name}: no lambda_exp_nm, fit skipped", file=sys.stderr
            )
            continue
        result = polyene.fit_sigma(mol, mass=args.mass, tol=args.tol)
        all_converged = all_converged and result.converged
        rows.append(result)
        kept.append(mol)
    _emit_fit_table(rows, kept, args)
    if not all_converged:
        return _fail("one or more fits did not converge to the requested tolerance", 4)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    mols = polyene.load_molecules(args.molecules)
    try:
        sigmas = [float(tok) for tok in args.sigmas.split(",") if tok.strip()]
    except ValueError:
        return _fail("--sigmas must be a comma-separated list of numbers", 2)
    if len(sigmas) != len(mols):
        return _fail(
            f"got {len(sigmas)} sigma values for {len(mols)} molecules", 2
        )
    rows = polyene.report(mols, sigmas, mass=args.mass)
    _emit_fit_table(rows, mols, args)
    return 0


# --- hydrogen ---------------------------------------------------------------


def cmd_hydrogen(args: argparse.Namespace) -> int:
    if args.n_level < 1:
        return _fail("--n-level must be >= 1", 2)
    if args.samples < 2:
        return _fail("--samples must be at least 2", 2)
    n = args.n_level
    a0 = args.a0
    s_max = args.s_max if args.s_max is not None else 4.0 * n * n * a0
    state = quantum.hydrogen_state_1d(n, a0)
    s_vals = np.linspace(s_max / args.samples, s_max, args.samples)
    rows = []
    for s in s_vals:
        s = float(s)
        psi = quantum.hydrogen_wavefunction_1d(state, s)
        radial = quantum.hydrogen_radial_3d(n, 0, s, a0)
        rows.append([_num(s), _num(psi), _num(psi * psi), _num(s * s * radial * radial)])
    _write(
        args.output,
        _csv(
            "s,psi_1d,prob_1d,prob_3d_radial",
            rows,
            [f"n = {n}", f"a0 = {_num(a0)}"],
        ),
    )
    return 0


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spiralbox",
        description="Spiral-curve quantum spectra, curve galleries, and polyene fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="sample a power-law-curvature spiral to CSV or SVG")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--p", type=float, default=1.0, help="curvature exponent (default 1)")
    p.add_argument("--s-min", type=float, default=0.05)
    p.add_argument("--s-max", type=float, default=4.0)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("spectrum", help="spiral-box energy levels (atomic units)")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--length", type=float, default=1.0, help="box length in bohr")
    p.add_argument("--mass", type=float, default=1.0, help="mass in electron masses")
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunction", help="normalized spiral-box eigenfunction dump")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--length", type=float, default=1.0)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("oracle", help="finite-difference check of the Bessel spectrum")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--length", type=float, default=1.0)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--grid", type=int, default=4000, help="coarse interior grid points")
    p.add_argument("--mode", choices=("effective", "literal"), default="effective")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fit", help="fit sigma per molecule from measured wavelengths")
    p.add_argument("--molecules", required=True, help="molecule JSON file")
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-6, help="wavelength tolerance in nm")
    p.add_argument("--effective-mass", action="store_true")
    p.add_argument("--svg", default=None)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("report", help="calculated vs experimental table at fixed sigmas")
    p.add_argument("--molecules", required=True)
    p.add_argument("--sigmas", required=True, help="comma-separated, one per molecule")
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--effective-mass", action="store_true")
    p.add_argument("--svg", default=None)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("hydrogen", help="1D bound state vs 3D radial density columns")
    p.add_argument("--n-level", type=int, required=True)
    p.add_argument("--a0", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--s-max", type=float, default=None)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_hydrogen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except polyene.FitRangeError as exc:
        return _fail(str(exc), 4)
    except OSError as exc:
        return _fail(f"cannot write output: {exc}", 3)
    except ValueError as exc:
        return _fail(str(exc), 2)


if __name__ == "__main__":
    raise SystemExit(main())
