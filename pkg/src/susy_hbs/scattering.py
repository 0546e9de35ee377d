"""Transmission and reflection for scattering potentials.

A wave incident from the left is set up by imposing the pure outgoing
solution psi = e^{ikx} on the right edge, integrating backward with
Numerov, and splitting psi at the left edge into A e^{ikx} + B e^{-ikx}.
Then T = 1/|A|^2 and R = |B|^2/|A|^2.
"""
from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.signal import find_peaks, peak_widths

from .bound_solver import _threads, as_potential
from .errors import EdgeNotFlat, EnergyNonPositive, InvalidParams
from .numerov import Potential, sweep

EDGE_TOL = 1e-8
SHARP_T = 0.999
SHARP_HALF_WIDTH = 0.1
# R differences below this are round-off on |A|^2 ~ 1
R_NOISE = 1e-15
DEFAULT_ENERGIES = np.geomspace(1e-3, 20.0, 400)

# 5-point one-sided first derivative, O(h^4)
_D5 = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0


@dataclass(frozen=True)
class ScatteringPoint:
    E: float
    R: float
    T: float

    @property
    def unitarity_residual(self) -> float:
        return abs(self.R + self.T - 1.0)


def _check_edges(pot: Potential, edge_tol: float):
    v = pot.values
    if abs(v[0]) > edge_tol or abs(v[-1]) > edge_tol:
        raise EdgeNotFlat(f"|V| at the grid ends is {max(abs(v[0]), abs(v[-1])):.3g} > {edge_tol:g}")


def _rt(pot: Potential, E: float, direction: str) -> ScatteringPoint:
    grid = pot.grid
    n, h = grid.n_points, grid.h
    k = math.sqrt(E)
    f = E - pot.values
    psi = np.zeros(n, dtype=complex)
    if direction == "left":
        x_end, x_start = grid.x_max, grid.x_min
        psi[n - 1] = cmath.exp(1j * k * x_end)
        psi[n - 2] = cmath.exp(1j * k * (x_end - h))
        sweep(f, h, psi, n - 1, 0)
        p0 = psi[0]
        dp0 = np.dot(_D5, psi[:5]) / h
        # incident e^{ikx}, reflected e^{-ikx}
        inc = 0.5 * (p0 + dp0 / (1j * k)) * cmath.exp(-1j * k * x_start)
        ref = 0.5 * (p0 - dp0 / (1j * k)) * cmath.exp(1j * k * x_start)
    elif direction == "right":
        x_end, x_start = grid.x_min, grid.x_max
        psi[0] = cmath.exp(-1j * k * x_end)
        psi[1] = cmath.exp(-1j * k * (x_end + h))
        sweep(f, h, psi, 0, n - 1)
        p0 = psi[n - 1]
        dp0 = -np.dot(_D5, psi[n - 1:n - 6:-1]) / h
        inc = 0.5 * (p0 - dp0 / (1j * k)) * cmath.exp(1j * k * x_start)
        ref = 0.5 * (p0 + dp0 / (1j * k)) * cmath.exp(-1j * k * x_start)
    else:
        raise InvalidParams(f"direction must be 'left' or 'right', got {direction!r}")
    a2 = abs(inc) ** 2
    return ScatteringPoint(float(E), abs(ref) ** 2 / a2, 1.0 / a2)


def rt_coefficients(potential, E: float, direction: str = "left",
                    edge_tol: float = EDGE_TOL) -> ScatteringPoint:
    """R and T at energy ``E`` for a wave incident from ``direction``."""
    if not E > 0:
        raise EnergyNonPositive(f"scattering needs E > 0, got {E:g}")
    pot = as_potential(potential)
    _check_edges(pot, edge_tol)
    return _rt(pot, float(E), direction)


@dataclass(frozen=True)
class Peak:
    E: float
    T: float
    half_width: float

    @property
    def sharp(self) -> bool:
        return self.T > SHARP_T and self.half_width < SHARP_HALF_WIDTH


@dataclass
class ScatteringCurve:
    E: np.ndarray
    R: np.ndarray
    T: np.ndarray
    candidates: list = field(default_factory=list)
    potential: Potential | None = field(default=None, repr=False)

    @property
    def residual(self) -> np.ndarray:
        return np.abs(self.R + self.T - 1.0)

    @property
    def sharp_peaks(self) -> list:
        return [p for p in self.candidates if p.sharp]

    def points(self) -> list:
        return [ScatteringPoint(e, r, t) for e, r, t in zip(self.E, self.R, self.T)]

    def rows(self) -> list:
        return [{"E": e, "R": r, "T": t, "residual": abs(r + t - 1.0)}
                for e, r, t in zip(self.E.tolist(), self.R.tolist(), self.T.tolist())]


def _t_peaks(E: np.ndarray, T: np.ndarray) -> list:
    """Local T maxima above SHARP_T with their half-widths in energy."""
    idx, _ = find_peaks(T)
    idx = idx[T[idx] > SHARP_T]
    if idx.size == 0:
        return []
    widths, _, left, right = peak_widths(T, idx, rel_height=0.5)
    pos = np.arange(E.size)
    e_left = np.interp(left, pos, E)
    e_right = np.interp(right, pos, E)
    return [Peak(float(E[i]), float(T[i]), float(0.5 * (er - el)))
            for i, el, er in zip(idx, e_left, e_right)]


def scan(potential, e_grid=None, direction: str = "left") -> ScatteringCurve:
    """R(E), T(E) over ascending positive energies; flags candidate T peaks."""
    pot = as_potential(potential)
    _check_edges(pot, EDGE_TOL)
    E = DEFAULT_ENERGIES if e_grid is None else np.asarray(e_grid, dtype=float)
    if E.ndim != 1 or E.size == 0 or np.any(E <= 0):
        raise EnergyNonPositive("energies must be positive")
    if np.any(np.diff(E) <= 0):
        raise InvalidParams("energies must be strictly ascending")
    with ThreadPoolExecutor(_threads()) as ex:
        pts = list(ex.map(lambda e: _rt(pot, e, direction), E))
    R = np.array([p.R for p in pts])
    T = np.array([p.T for p in pts])
    return ScatteringCurve(E.copy(), R, T, _t_peaks(E, T), pot)


def find_r_minima(curve: ScatteringCurve, potential=None, tol: float = 1e-4) -> list:
    """Interior strict local minima of R, golden-section refined to ``tol`` in E.

    A sample counts as a minimum only if both neighbours exceed it by more
    than ``R_NOISE``, so round-off ripples on a flat R ~ 0 are ignored.
    Returns a list of ``(E, R)``. Without a potential (argument or stored on
    the curve) the sampled minima are returned unrefined.
    """
    E, R = curve.E, curve.R
    if E.size < 3:
        raise InvalidParams("need at least three points")
    pot = potential if potential is not None else curve.potential
    pot = None if pot is None else as_potential(pot)
    out = []
    for i in np.nonzero((R[1:-1] < R[:-2] - R_NOISE) & (R[1:-1] < R[2:] - R_NOISE))[0] + 1:
        if pot is None:
            out.append((float(E[i]), float(R[i])))
            continue
        fun = lambda e: _rt(pot, e, "left").R  # noqa: E731
        res = minimize_scalar(fun, bracket=(E[i - 1], E[i], E[i + 1]), method="golden",
                              options={"xtol": tol / (2.0 * E[i + 1])})
        out.append((float(res.x), float(res.fun)))
    return out
