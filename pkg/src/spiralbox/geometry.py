"""Plane curves with power-law curvature k(s) = 1/(sigma * s^p).

Closed forms exist for the two cases used by the physics layers (p = 1/2,
the "hydrogen" spiral, and p = 1, the "polyene" spiral); a generic
fixed-step Frenet integrator provides the independent reconstruction check
for both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "CurvatureLaw",
    "FrenetState",
    "PlaneCurveSamples",
    "cs_functions",
    "hydrogen_curve",
    "polyene_curve",
    "frenet_integrate",
    "curvature_of_samples",
    "log_spaced",
    "sample_hydrogen_curve",
    "sample_polyene_curve",
]

_ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class CurvatureLaw:
    """Power-law curvature k(s) = 1/(sigma * s^p) on s > 0."""

    sigma: float
    p: float

    def __post_init__(self) -> None:
        if not (self.sigma > 0.0) or not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be positive and finite, got {self.sigma!r}")
        if not math.isfinite(self.p):
            raise ValueError(f"p must be finite, got {self.p!r}")

    def k(self, s: float) -> float:
        if s <= 0.0:
            raise ValueError(f"curvature law is defined for s > 0, got {s!r}")
        return 1.0 / (self.sigma * s**self.p)

    def turning_angle(self, s: float) -> float:
        """Integral of k, i.e. the tangent angle swept from the reference point."""
        if s <= 0.0:
            raise ValueError(f"turning angle is defined for s > 0, got {s!r}")
        if self.p == 1.0:
            return math.log(s) / self.sigma
        return s ** (1.0 - self.p) / (self.sigma * (1.0 - self.p))


def cs_functions(law: CurvatureLaw, s: float) -> tuple[float, float]:
    """The (cos, sin) pair of the swept tangent angle for a power-law curve."""
    theta = law.turning_angle(s)
    return math.cos(theta), math.sin(theta)


@dataclass(frozen=True)
class FrenetState:
    """Moving frame of a plane curve at arc length s."""

    s: float
    position: tuple[float, float]
    tangent: tuple[float, float] = (1.0, 0.0)
    normal: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self) -> None:
        tx, ty = self.tangent
        nx, ny = self.normal
        if abs(math.hypot(tx, ty) - 1.0) > _ORTHO_TOL:
            raise ValueError("tangent must be a unit vector")
        if abs(math.hypot(nx, ny) - 1.0) > _ORTHO_TOL:
            raise ValueError("normal must be a unit vector")
        if abs(tx * nx + ty * ny) > _ORTHO_TOL:
            raise ValueError("tangent and normal must be orthogonal")


@dataclass(frozen=True, eq=False)
class PlaneCurveSamples:
    """Arc-length-indexed curve samples, immutable after construction."""

    s_values: np.ndarray
    points: np.ndarray
    start_s: float
    center: tuple[float, float] = (0.0, 0.0)
    tangents: np.ndarray | None = field(default=None, compare=False)
    normals: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        s = np.asarray(self.s_values, dtype=float)
        pts = np.asarray(self.points, dtype=float)
        if s.ndim != 1 or pts.shape != (s.size, 2):
            raise ValueError("need matching 1-d arc lengths and (n, 2) points")
        if s.size >= 2 and not np.all(np.diff(s) > 0.0):
            raise ValueError("arc lengths must be strictly increasing")
        object.__setattr__(self, "s_values", s)
        object.__setattr__(self, "points", pts)

    def chord_lengths(self) -> np.ndarray:
        return np.linalg.norm(np.diff(self.points, axis=0), axis=1)

    def polyline_length(self) -> float:
        return float(self.chord_lengths().sum())


def _rotation(c: float, s: float) -> np.ndarray:
    return np.array([[c, s], [-s, c]])


def hydrogen_curve(
    sigma: float,
    s: float,
    s0: float = 1.0,
    center: Sequence[float] = (0.0, 0.0),
) -> np.ndarray:
    """Point on the p = 1/2 spiral that winds around `center`.

    The curve obeys ||point - center|| = sigma * sqrt(s + sigma^2/4) and is
    arc-length parametrized with tangent (1, 0) at s0.
    """
    if s <= 0.0 or s0 <= 0.0:
        raise ValueError("hydrogen curve is defined for s > 0 and s0 > 0")
    law = CurvatureLaw(sigma, 0.5)
    c0, s0_ = cs_functions(law, s0)
    c, sn = cs_functions(law, s)
    half_sig2 = 0.5 * sigma * sigma
    root = sigma * math.sqrt(s)
    inner = np.array(
        [half_sig2 * c + root * sn, -root * c + half_sig2 * sn]
    )
    return _rotation(c0, s0_) @ inner + np.asarray(center, dtype=float)


def polyene_curve(sigma: float, s: float) -> np.ndarray:
    """Point on the p = 1 spiral with reference point s0 = 1 and center (0, 0).

    Obeys the radius law ||point|| = sigma * s / sqrt(1 + sigma^2).
    """
    if s <= 0.0:
        raise ValueError("polyene curve is defined for s > 0")
    if sigma <= 0.0:
        raise ValueError("sigma must be positive")
    theta = math.log(s) / sigma
    c, sn = math.cos(theta), math.sin(theta)
    amp = sigma * s / (1.0 + sigma * sigma)
    return np.array([amp * (c + sigma * sn), amp * (sn - sigma * c)])


def frenet_integrate(
    k: Callable[[float], float],
    s0: float,
    s1: float,
    steps: int,
    initial: FrenetState | None = None,
) -> PlaneCurveSamples:
    """Integrate t' = k n, n' = -k t, alpha' = t with classical RK4.

    Samples are recorded at `steps + 1` uniform arc lengths.  Within each
    step the integrator sub-steps so that k * ds <= 0.1, which keeps the
    scheme in its asymptotic regime on tightly wound spiral segments; the
    frame is re-orthonormalized after every sub-step.
    """
    if not s0 < s1:
        raise ValueError(f"need s0 < s1, got [{s0!r}, {s1!r}]")
    if steps < 1:
        raise ValueError("steps must be a positive integer")
    if initial is None:
        initial = FrenetState(s=s0, position=(0.0, 0.0))

    h = (s1 - s0) / steps
    px, py = initial.position
    tx, ty = initial.tangent
    nx, ny = initial.normal

    s_out = np.empty(steps + 1)
    pts = np.empty((steps + 1, 2))
    tans = np.empty((steps + 1, 2))
    norms = np.empty((steps + 1, 2))
    s_out[0] = s0
    pts[0] = (px, py)
    tans[0] = (tx, ty)
    norms[0] = (nx, ny)

    def _k(s: float) -> float:
        val = k(s)
        if not math.isfinite(val):
            raise ValueError(f"curvature is not finite at s = {s!r}")
        return val

    for i in range(steps):
        s_left = s0 + i * h
        n_sub = max(1, math.ceil(abs(_k(s_left)) * h / 0.1))
        ds = h / n_sub
        s_cur = s_left
        for _ in range(n_sub):
            k1 = _k(s_cur)
            k2 = _k(s_cur + 0.5 * ds)
            k4 = _k(s_cur + ds)

            # stage 1
            a_px, a_py = tx, ty
            a_tx, a_ty = k1 * nx, k1 * ny
            a_nx, a_ny = -k1 * tx, -k1 * ty
            # stage 2
            tx2, ty2 = tx + 0.5 * ds * a_tx, ty + 0.5 * ds * a_ty
            nx2, ny2 = nx + 0.5 * ds * a_nx, ny + 0.5 * ds * a_ny
            b_px, b_py = tx2, ty2
            b_tx, b_ty = k2 * nx2, k2 * ny2
            b_nx, b_ny = -k2 * tx2, -k2 * ty2
            # stage 3
            tx3, ty3 = tx + 0.5 * ds * b_tx, ty + 0.5 * ds * b_ty
            nx3, ny3 = nx + 0.5 * ds * b_nx, ny + 0.5 * ds * b_ny
            c_px, c_py = tx3, ty3
            c_tx, c_ty = k2 * nx3, k2 * ny3
            c_nx, c_ny = -k2 * tx3, -k2 * ty3
            # stage 4
            tx4, ty4 = tx + ds * c_tx, ty + ds * c_ty
            nx4, ny4 = nx + ds * c_nx, ny + ds * c_ny
            d_px, d_py = tx4, ty4
            d_tx, d_ty = k4 * nx4, k4 * ny4
            d_nx, d_ny = -k4 * tx4, -k4 * ty4

            w = ds / 6.0
            px += w * (a_px + 2.0 * (b_px + c_px) + d_px)
            py += w * (a_py + 2.0 * (b_py + c_py) + d_py)
            tx += w * (a_tx + 2.0 * (b_tx + c_tx) + d_tx)
            ty += w * (a_ty + 2.0 * (b_ty + c_ty) + d_ty)
            nx += w * (a_nx + 2.0 * (b_nx + c_nx) + d_nx)
            ny += w * (a_ny + 2.0 * (b_ny + c_ny) + d_ny)

            inv = 1.0 / math.hypot(tx, ty)
            tx *= inv
            ty *= inv
            dot = nx * tx + ny * ty
            nx -= dot * tx
            ny -= dot * ty
            inv = 1.0 / math.hypot(nx, ny)
            nx *= inv
            ny *= inv
            s_cur += ds

        s_out[i + 1] = s0 + (i + 1) * h
        pts[i + 1] = (px, py)
        tans[i + 1] = (tx, ty)
        norms[i + 1] = (nx, ny)

    return PlaneCurveSamples(
        s_values=s_out,
        points=pts,
        start_s=s0,
        center=tuple(initial.position),
        tangents=tans,
        normals=norms,
    )


def curvature_of_samples(samples: PlaneCurveSamples) -> np.ndarray:
    """Finite-difference curvature |a' x a''| / |a'|^3 at interior nodes.

    Requires at least three uniformly spaced samples.
    """
    s = samples.s_values
    pts = samples.points
    if s.size < 3:
        raise ValueError("curvature reconstruction needs at least 3 samples")
    steps = np.diff(s)
    h = steps[0]
    if not np.allclose(steps, h, rtol=1e-8, atol=0.0):
        raise ValueError("curvature reconstruction needs uniform arc-length spacing")
    d1 = (pts[2:] - pts[:-2]) / (2.0 * h)
    d2 = (pts[2:] - 2.0 * pts[1:-1] + pts[:-2]) / (h * h)
    cross = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
    speed = np.linalg.norm(d1, axis=1)
    return np.abs(cross) / speed**3


def log_spaced(s_min: float, s_max: float, n: int) -> np.ndarray:
    """Logarithmically spaced arc lengths; resolves the spiral near its center."""
    if not (0.0 < s_min < s_max):
        raise ValueError("need 0 < s_min < s_max")
    return np.geomspace(s_min, s_max, n)


def sample_hydrogen_curve(
    sigma: float,
    s_values: np.ndarray,
    s0: float = 1.0,
    center: Sequence[float] = (0.0, 0.0),
) -> PlaneCurveSamples:
    pts = np.array([hydrogen_curve(sigma, float(s), s0, center) for s in s_values])
    return PlaneCurveSamples(
        s_values=np.asarray(s_values, dtype=float),
        points=pts,
        start_s=s0,
        center=tuple(center),
    )


def sample_polyene_curve(sigma: float, s_values: np.ndarray) -> PlaneCurveSamples:
    pts = np.array([polyene_curve(sigma, float(s)) for s in s_values])
    return PlaneCurveSamples(
        s_values=np.asarray(s_values, dtype=float),
        points=pts,
        start_s=1.0,
        center=(0.0, 0.0),
    )
