"""Closed-form quantum mechanics layer.

Covers the curvature-induced potential -hbar^2 k^2 / (8m), the Dirichlet
spectrum of the inverse-square problem on a spiral box (Bessel zeros), the
straight particle-in-a-box baselines, transition wavelengths, and the 1D
hydrogen bound states with their 3D radial counterparts.

All internal arithmetic is in Hartree atomic units (hbar = m_e = 1);
electron-volt and nanometer conversions happen only through a UnitSystem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol

from . import specfun

__all__ = [
    "UnitSystem",
    "DEFAULT_UNITS",
    "EnergyLevels",
    "SpiralBoxSpectrum",
    "ParticleInBox",
    "HydrogenState1D",
    "geometry_induced_potential",
    "omega_from_sigma",
    "spiral_box_spectrum",
    "spiral_box_normalization",
    "spiral_box_wavefunction",
    "pib_open_energy",
    "pib_closed_energy",
    "transition_wavelength",
    "hydrogen_state_1d",
    "hydrogen_wavefunction_1d",
    "hydrogen_radial_3d",
]


@dataclass(frozen=True)
class UnitSystem:
    """Hartree atomic units plus the eV/nm conversion constants (CODATA 2018)."""

    hbar: float = 1.0
    mass_electron: float = 1.0
    hartree_ev: float = 27.211386245988
    hc_ev_nm: float = 1239.841984
    bohr_nm: float = 0.0529177210903

    def nm_to_bohr(self, length_nm: float) -> float:
        return length_nm / self.bohr_nm

    def hartree_to_ev(self, energy: float) -> float:
        return energy * self.hartree_ev


DEFAULT_UNITS = UnitSystem()


class EnergyLevels(Protocol):
    """Anything exposing an indexed spectrum E_1 <= E_2 <= ... in Hartree."""

    def energy(self, n: int) -> float: ...


def geometry_induced_potential(
    k_value: float, mass: float, units: UnitSystem = DEFAULT_UNITS
) -> float:
    """Scalar potential -hbar^2 k^2 / (8 m) felt by a particle bound to a curve."""
    if mass <= 0.0:
        raise ValueError("mass must be positive")
    return -(units.hbar**2) * k_value * k_value / (8.0 * mass)


def omega_from_sigma(sigma: float) -> float:
    """Bessel order omega = sqrt(|1 - 1/sigma^2|) / 2 of the spiral-box problem."""
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    inv_sq = 0.0 if math.isinf(sigma) else 1.0 / (sigma * sigma)
    return 0.5 * math.sqrt(abs(1.0 - inv_sq))


@dataclass(frozen=True)
class SpiralBoxSpectrum:
    """Dirichlet levels E_n = hbar^2 j_{omega,n}^2 / (2 m L^2) on [0, L]."""

    sigma: float
    omega: float
    box_length: float
    mass: float
    zeros: tuple[float, ...]
    energies: tuple[float, ...]

    @property
    def n_levels(self) -> int:
        return len(self.energies)

    def energy(self, n: int) -> float:
        if not 1 <= n <= self.n_levels:
            raise IndexError(f"level index {n} outside 1..{self.n_levels}")
        return self.energies[n - 1]

    def zero(self, n: int) -> float:
        if not 1 <= n <= self.n_levels:
            raise IndexError(f"level index {n} outside 1..{self.n_levels}")
        return self.zeros[n - 1]


def spiral_box_spectrum(
    sigma: float,
    box_length: float,
    mass: float,
    n_levels: int,
    units: UnitSystem = DEFAULT_UNITS,
) -> SpiralBoxSpectrum:
    """Spectrum of the spiral box with curvature k = 1/(sigma * s), length L."""
    if box_length <= 0.0 or mass <= 0.0 or n_levels < 1:
        raise ValueError("box_length, mass and n_levels must all be positive")
    omega = omega_from_sigma(sigma)
    zeros = tuple(specfun.bessel_j_zero(omega, n) for n in range(1, n_levels + 1))
    pref = units.hbar**2 / (2.0 * mass * box_length * box_length)
    energies = tuple(pref * j * j for j in zeros)
    return SpiralBoxSpectrum(
        sigma=sigma,
        omega=omega,
        box_length=box_length,
        mass=mass,
        zeros=zeros,
        energies=energies,
    )


def spiral_box_normalization(spectrum: SpiralBoxSpectrum, n: int) -> float:
    """Normalization c1 of psi_n = c1 sqrt(s) J_omega(j_n s / L).

    Evaluated as sqrt(2) / (L |J_{omega+1}(j_n)|), which at a zero of
    J_omega equals the recurrence form sqrt(2)/(L sqrt(-J_{omega-1} J_{omega+1}))
    while staying inside non-negative orders for omega < 1.
    """
    j = spectrum.zero(n)
    return math.sqrt(2.0) / (
        spectrum.box_length * abs(specfun.bessel_j(spectrum.omega + 1.0, j))
    )


def spiral_box_wavefunction(spectrum: SpiralBoxSpectrum, n: int, s: float) -> float:
    """Normalized eigenfunction value psi_n(s) on 0 <= s <= L."""
    length = spectrum.box_length
    if not 0.0 <= s <= length * (1.0 + 1e-12):
        raise ValueError(f"s = {s!r} outside the box [0, {length!r}]")
    if s == 0.0:
        return 0.0
    j = spectrum.zero(n)
    c1 = spiral_box_normalization(spectrum, n)
    return c1 * math.sqrt(s) * specfun.bessel_j(spectrum.omega, j * min(s, length) / length)


def pib_open_energy(n: int, box_length: float, mass: float) -> float:
    """Level h^2 n^2 / (8 m L^2) of the straight box with hard walls."""
    if n < 1 or box_length <= 0.0 or mass <= 0.0:
        raise ValueError("n, box_length and mass must all be positive")
    h = 2.0 * math.pi  # Planck constant in atomic units
    return h * h * n * n / (8.0 * mass * box_length * box_length)


def pib_closed_energy(n: int, box_length: float, mass: float) -> float:
    """Level of the closed curve (periodic boundary), exactly 4x the open value."""
    return 4.0 * pib_open_energy(n, box_length, mass)


@dataclass(frozen=True)
class ParticleInBox:
    """Energy-level provider for the straight box, open or closed."""

    box_length: float
    mass: float
    closed: bool = False

    def energy(self, n: int) -> float:
        if self.closed:
            return pib_closed_energy(n, self.box_length, self.mass)
        return pib_open_energy(n, self.box_length, self.mass)


def transition_wavelength(
    levels: EnergyLevels, n_homo: int, units: UnitSystem = DEFAULT_UNITS
) -> float:
    """Photon wavelength hc / (E_{n+1} - E_n) in nanometers."""
    if n_homo < 1:
        raise ValueError("n_homo must be >= 1")
    delta = levels.energy(n_homo + 1) - levels.energy(n_homo)
    if delta <= 0.0:
        raise ValueError("levels must be strictly increasing across the transition")
    return units.hc_ev_nm / units.hartree_to_ev(delta)


# --- 1D hydrogen along the p = 1/2 spiral and the 3D radial comparison ----

_NORM_SPEC = specfun.QuadratureSpec(abs_tol=1e-13, rel_tol=1e-13, max_subdivisions=48)


@dataclass(frozen=True)
class HydrogenState1D:
    """Bound state psi_N = B exp(-z/2) z L_{N-1}^(1)(z), z = 2s/(N a0)."""

    n: int
    a0: float
    normalization: float


def _hydrogen_1d_raw(n: int, a0: float, s: float) -> float:
    z = 2.0 * s / (n * a0)
    return math.exp(-0.5 * z) * z * specfun.laguerre(n - 1, 1.0, z)


def hydrogen_state_1d(n: int, a0: float = 1.0) -> HydrogenState1D:
    """Construct the N-th bound state; B is fixed by quadrature of psi^2.

    The normalization integral is truncated at 50 N a0, where the integrand
    has decayed below 1e-40.
    """
    if n < 1:
        raise ValueError("principal quantum number must be >= 1")
    if a0 <= 0.0:
        raise ValueError("a0 must be positive")
    raw_sq = specfun.integrate(
        lambda s: _hydrogen_1d_raw(n, a0, s) ** 2, 0.0, 50.0 * n * a0, _NORM_SPEC
    )
    return HydrogenState1D(n=n, a0=a0, normalization=1.0 / math.sqrt(raw_sq))


def hydrogen_wavefunction_1d(state: HydrogenState1D, s: float) -> float:
    """Normalized 1D bound-state value at arc length s > 0."""
    if s <= 0.0:
        raise ValueError("the half-line solution is defined for s > 0")
    return state.normalization * _hydrogen_1d_raw(state.n, state.a0, s)


_RADIAL_NORM_CACHE: dict[tuple[int, int, float], float] = {}


def _hydrogen_3d_raw(n: int, ell: int, a0: float, r: float) -> float:
    z = 2.0 * r / (n * a0)
    return math.exp(-0.5 * z) * z**ell * specfun.laguerre(n - ell - 1, 2.0 * ell + 1.0, z)


def hydrogen_radial_3d(n: int, ell: int, r: float, a0: float = 1.0) -> float:
    """Radial function R_{n,ell}(r), normalized so that int r^2 R^2 dr = 1."""
    if n < 1 or ell < 0:
        raise ValueError("need n >= 1 and ell >= 0")
    if ell >= n:
        raise ValueError(f"angular momentum ell = {ell} must be below n = {n}")
    if r <= 0.0:
        raise ValueError("the radial coordinate must be positive")
    key = (n, ell, a0)
    norm = _RADIAL_NORM_CACHE.get(key)
    if norm is None:
        raw_sq = specfun.integrate(
            lambda x: x * x * _hydrogen_3d_raw(n, ell, a0, x) ** 2,
            0.0,
            50.0 * n * a0,
            _NORM_SPEC,
        )
        norm = 1.0 / math.sqrt(raw_sq)
        _RADIAL_NORM_CACHE[key] = norm
    return norm * _hydrogen_3d_raw(n, ell, a0, r)
