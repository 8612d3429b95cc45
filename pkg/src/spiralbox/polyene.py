"""Polyene chemistry layer: molecule records, sigma and effective-mass fits,
and the calculated-vs-experimental transition report.

Experimental absorption wavelengths and conjugation lengths are inputs (they
come from published UV measurements, e.g. Christensen et al. 2008), never
constants baked into the code; molecule data lives in user-editable JSON
files.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import quantum
from .quantum import DEFAULT_UNITS, UnitSystem

__all__ = [
    "Molecule",
    "FitResult",
    "FitRangeError",
    "homo_index",
    "heuristic_box_length",
    "lambda_model",
    "fit_sigma",
    "fit_effective_mass",
    "report",
    "load_molecules",
    "write_report_csv",
    "REPORT_CSV_HEADER",
]

# Grid used to bracket the root of lambda_model(sigma) = lambda_exp before
# bisection.  Wide enough to cover fitted values near 0.02..0.07 with large
# margin on both sides.
SIGMA_SCAN_MIN = 1e-4
SIGMA_SCAN_MAX = 1e3
SIGMA_SCAN_POINTS = 400


@dataclass(frozen=True)
class Molecule:
    """A linear polyene: pi-electron count, box length, optional measured lambda."""

    name: str
    n_pi: int
    box_length: float  # nm
    lambda_exp: float | None = None  # nm
    source: str = ""

    def __post_init__(self) -> None:
        if self.n_pi < 2 or self.n_pi % 2 != 0:
            raise ValueError(f"{self.name}: n_pi must be a positive even integer")
        if not self.box_length > 0.0:
            raise ValueError(f"{self.name}: box_length must be positive")
        if self.lambda_exp is not None and not self.lambda_exp > 0.0:
            raise ValueError(f"{self.name}: lambda_exp must be positive when given")


def homo_index(mol: Molecule) -> int:
    """Highest occupied level: pi electrons paired two per level."""
    return mol.n_pi // 2


def heuristic_box_length(n_bonds: int, bond_nm: float = 0.139) -> float:
    """Conventional conjugated-chain length (n_bonds + 1) * 0.139 nm.

    A bookkeeping default for when no measured chain length is available,
    not a substitute for one.
    """
    if n_bonds < 1:
        raise ValueError("need at least one bond")
    return (n_bonds + 1) * bond_nm


@dataclass(frozen=True)
class FitResult:
    """Outcome of a sigma fit (or of a fixed-sigma report row)."""

    name: str
    sigma: float
    omega: float
    lambda_calc: float
    lambda_exp: float | None
    percent_error: float | None
    iterations: int
    converged: bool


class FitRangeError(ValueError):
    """The target wavelength is outside the range attainable on the scan grid."""

    def __init__(self, name: str, target: float, attainable: tuple[float, float]):
        self.name = name
        self.target = target
        self.attainable = attainable
        super().__init__(
            f"{name}: lambda_exp = {target:.6g} nm is outside the attainable "
            f"model range [{attainable[0]:.6g}, {attainable[1]:.6g}] nm"
        )


def lambda_model(
    sigma: float, mol: Molecule, mass: float = 1.0, units: UnitSystem = DEFAULT_UNITS
) -> float:
    """Transition wavelength (nm) of the spiral-box spectrum at the HOMO step."""
    n = homo_index(mol)
    length = units.nm_to_bohr(mol.box_length)
    spectrum = quantum.spiral_box_spectrum(sigma, length, mass, n + 1, units)
    return quantum.transition_wavelength(spectrum, n, units)


def _percent_error(calc: float, exp: float) -> float:
    return 100.0 * abs(calc - exp) / exp


def fit_sigma(
    mol: Molecule,
    mass: float = 1.0,
    tol: float = 1e-6,
    sigma_min: float = SIGMA_SCAN_MIN,
    sigma_max: float = SIGMA_SCAN_MAX,
    grid_points: int = SIGMA_SCAN_POINTS,
    units: UnitSystem = DEFAULT_UNITS,
) -> FitResult:
    """Find sigma reproducing the measured wavelength.

    Scans the log grid upward from sigma_min and bisects (in log sigma) the
    first sign-change bracket, which selects the strong-confinement branch
    sigma < 1 whenever the target is reachable there.  Convergence means
    |lambda_model(sigma) - lambda_exp| <= tol.
    """
    if mol.lambda_exp is None:
        raise ValueError(f"{mol.name}: cannot fit sigma without lambda_exp")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    target = mol.lambda_exp

    ratio = (sigma_max / sigma_min) ** (1.0 / (grid_points - 1))
    lo = sigma_min
    g_lo = lambda_model(lo, mol, mass, units) - target
    seen_min = seen_max = g_lo + target
    hi = None
    g_hi = 0.0
    sigma_cur = lo
    for _ in range(grid_points - 1):
        sigma_next = sigma_cur * ratio
        g_next = lambda_model(sigma_next, mol, mass, units) - target
        lam = g_next + target
        seen_min = min(seen_min, lam)
        seen_max = max(seen_max, lam)
        if (g_lo <= 0.0) != (g_next <= 0.0):
            lo, hi, g_hi = sigma_cur, sigma_next, g_next
            break
        sigma_cur, g_lo = sigma_next, g_next
        lo = sigma_cur  # g_lo always belongs to lo
    if hi is None:
        raise FitRangeError(mol.name, target, (seen_min, seen_max))

    iterations = 0
    best_sigma, best_g = (lo, g_lo) if abs(g_lo) <= abs(g_hi) else (hi, g_hi)
    while abs(best_g) > tol and (hi - lo) > 1e-15 * hi and iterations < 200:
        mid = math.exp(0.5 * (math.log(lo) + math.log(hi)))
        if mid <= lo or mid >= hi:
            break
        g_mid = lambda_model(mid, mol, mass, units) - target
        iterations += 1
        if abs(g_mid) < abs(best_g):
            best_sigma, best_g = mid, g_mid
        if (g_lo <= 0.0) == (g_mid <= 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid

    lam_calc = best_g + target
    return FitResult(
        name=mol.name,
        sigma=best_sigma,
        omega=quantum.omega_from_sigma(best_sigma),
        lambda_calc=lam_calc,
        lambda_exp=target,
        percent_error=_percent_error(lam_calc, target),
        iterations=iterations,
        converged=abs(best_g) <= tol,
    )


def fit_effective_mass(mol: Molecule, units: UnitSystem = DEFAULT_UNITS) -> float:
    """Mass (units of m_e) making the straight-box HOMO->LUMO step match lambda_exp.

    Closed form from inverting Delta_E = h^2 (2n+1) / (8 m L^2) = hc/lambda.
    """
    if mol.lambda_exp is None:
        raise ValueError(f"{mol.name}: cannot fit an effective mass without lambda_exp")
    n = homo_index(mol)
    length = units.nm_to_bohr(mol.box_length)
    delta_e = (units.hc_ev_nm / mol.lambda_exp) / units.hartree_ev
    h = 2.0 * math.pi
    return h * h * (2 * n + 1) / (8.0 * length * length * delta_e)


def report(
    mols: Sequence[Molecule],
    sigmas: Sequence[float],
    mass: float = 1.0,
    csv_path: str | Path | None = None,
    svg_path: str | Path | None = None,
    effective_mass: bool = False,
    units: UnitSystem = DEFAULT_UNITS,
) -> list[FitResult]:
    """Calculated-vs-experimental table at fixed sigma per molecule.

    Optionally writes the CSV table and a paired bar chart; rows without a
    measured wavelength get blank experimental columns.
    """
    if len(mols) != len(sigmas):
        raise ValueError("need exactly one sigma per molecule")
    rows: list[FitResult] = []
    for mol, sigma in zip(mols, sigmas):
        lam_calc = lambda_model(sigma, mol, mass, units)
        lam_exp = mol.lambda_exp
        rows.append(
            FitResult(
                name=mol.name,
                sigma=sigma,
                omega=quantum.omega_from_sigma(sigma),
                lambda_calc=lam_calc,
                lambda_exp=lam_exp,
                percent_error=None if lam_exp is None else _percent_error(lam_calc, lam_exp),
                iterations=0,
                converged=False,
            )
        )
    if csv_path is not None:
        masses = [fit_effective_mass(m, units) if effective_mass and m.lambda_exp else None for m in mols]
        write_report_csv(rows, csv_path, effective_masses=masses if effective_mass else None)
    if svg_path is not None:
        from . import svgplot

        Path(svg_path).write_text(svgplot.report_bar_chart(rows), encoding="utf-8")
    return rows


REPORT_CSV_HEADER = "name,sigma,omega,lambda_calc_nm,lambda_exp_nm,percent_error"


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.10g}"


def write_report_csv(
    rows: Sequence[FitResult],
    path: str | Path,
    effective_masses: Sequence[float | None] | None = None,
) -> None:
    header = REPORT_CSV_HEADER.split(",")
    if effective_masses is not None:
        header.append("effective_mass_me")
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for i, r in enumerate(rows):
            cells = [
                r.name,
                _fmt(r.sigma),
                _fmt(r.omega),
                _fmt(r.lambda_calc),
                _fmt(r.lambda_exp),
                _fmt(r.percent_error),
            ]
            if effective_masses is not None:
                cells.append(_fmt(effective_masses[i]))
            writer.writerow(cells)


_MOLECULE_FIELDS = {"name", "n_pi", "box_length_nm", "lambda_exp_nm", "source"}
_REQUIRED_FIELDS = {"name", "n_pi", "box_length_nm", "source"}


def load_molecules(path: str | Path) -> list[Molecule]:
    """Read a molecule JSON file (a list of records with fixed field names)."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise ValueError("molecule file must contain a JSON array of records")
    mols = []
    for i, rec in enumerate(raw):
        if not isinstance(rec, dict):
            raise ValueError(f"record {i} is not a JSON object")
        unknown = set(rec) - _MOLECULE_FIELDS
        if unknown:
            raise ValueError(f"record {i} has unknown fields: {sorted(unknown)}")
        missing = _REQUIRED_FIELDS - set(rec)
        if missing:
            raise ValueError(f"record {i} is missing fields: {sorted(missing)}")
        mols.append(
            Molecule(
                name=rec["name"],
                n_pi=rec["n_pi"],
                box_length=rec["box_length_nm"],
                lambda_exp=rec.get("lambda_exp_nm"),
                source=rec["source"],
            )
        )
    return mols
