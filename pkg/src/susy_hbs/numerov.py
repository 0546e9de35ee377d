"""Numerov integration of psi'' = (V - E) psi on uniform grids.

Units are 2*mu = hbar**2 = 1 throughout, so the equation solved is
``psi'' + (E - V) psi = 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numba
import numpy as np

from .errors import GridMismatch, InvalidParams

RESCALE_THRESHOLD = 1e100


@dataclass(frozen=True)
class Grid:
    """Uniform grid with an odd number of points (Simpson compatible)."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise InvalidParams(f"n_points must be odd and >= 3, got {self.n_points}")
        if not self.x_max > self.x_min:
            raise InvalidParams("x_max must exceed x_min")

    @classmethod
    def symmetric(cls, L: float = 12.0, n_points: int = 4801) -> "Grid":
        return cls(-float(L), float(L), int(n_points))

    @classmethod
    def with_step(cls, x_min: float, x_max: float, h: float) -> "Grid":
        """Grid covering [x_min, x_max] with spacing no larger than ``h``."""
        n = int(math.ceil((x_max - x_min) / h)) + 1
        if n % 2 == 0:
            n += 1
        return cls(x_min, x_max, max(n, 3))

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    @property
    def L(self) -> float:
        return max(abs(self.x_min), abs(self.x_max))

    def refined(self) -> "Grid":
        """Same window, half the step."""
        return Grid(self.x_min, self.x_max, 2 * self.n_points - 1)


DEFAULT_GRID = Grid.symmetric(12.0, 4801)


@dataclass(frozen=True)
class Potential:
    """A potential sampled on a grid.

    ``func`` is optional; when present the potential can be resampled on
    any other grid exactly, otherwise resampling interpolates linearly and
    pads with zeros outside the original window.
    """

    grid: Grid
    values: np.ndarray
    func: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, repr=False)
    label: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.n_points,):
            raise GridMismatch(
                f"{values.shape[0]} samples for a grid of {self.grid.n_points} points"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, func, grid: Grid = DEFAULT_GRID, label: str = "") -> "Potential":
        return cls(grid, func(grid.x), func, label)

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    def __call__(self, x):
        if self.func is not None:
            return self.func(np.asarray(x, dtype=float))
        return np.interp(x, self.grid.x, self.values, left=0.0, right=0.0)

    def __mul__(self, c: float) -> "Potential":
        c = float(c)
        func = None if self.func is None else (lambda x, f=self.func: c * f(x))
        label = f"{c:g}*{self.label}" if self.label else ""
        return Potential(self.grid, c * self.values, func, label)

    __rmul__ = __mul__

    def __neg__(self) -> "Potential":
        return self * -1.0

    def on(self, grid: Grid) -> "Potential":
        """Resample onto ``grid``."""
        if grid == self.grid:
            return self
        return Potential(grid, self(grid.x), self.func, self.label)


@dataclass
class WaveTable:
    """Wavefunction samples; the true values are ``values * exp(log_scale)``."""

    grid: Grid
    values: np.ndarray
    log_scale: float = 0.0

    @property
    def x(self) -> np.ndarray:
        return self.grid.x


@numba.njit(cache=True, nogil=True)
def _numerov_sweep(f, h2, psi, start, stop, step):
    # psi[start] and psi[start + step] must be set; fills up to psi[stop]
    # inclusive. Returns accumulated log of rescale factors.
    log_scale = 0.0
    i = start + step
    while i != stop:
        c_next = 1.0 + h2 * f[i + step] / 12.0
        c_prev = 1.0 + h2 * f[i - step] / 12.0
        c_here = 1.0 - 5.0 * h2 * f[i] / 12.0
        psi[i + step] = (2.0 * c_here * psi[i] - c_prev * psi[i - step]) / c_next
        a = abs(psi[i + step])
        if a > 1e100:
            j = start
            while j != i + 2 * step:
                psi[j] /= a
                j += step
            log_scale += math.log(a)
        i += step
    return log_scale


def sweep(f: np.ndarray, h: float, psi: np.ndarray, start: int, stop: int) -> float:
    """Run the Numerov recurrence in place on ``psi`` from ``start`` to ``stop``.

    ``f`` holds E - V on the grid. Works for real and complex ``psi``.
    Returns the log of the cumulative rescale factor.
    """
    step = 1 if stop > start else -1
    if stop == start or stop == start + step:
        return 0.0
    return _numerov_sweep(f, h * h, psi, start, stop, step)


def integrate(potential, E: float, direction: str = "forward", psi0=None, psi1=None,
              grid: Optional[Grid] = None) -> WaveTable:
    """Integrate psi'' = (V - E) psi across the whole grid.

    Parameters
    ----------
    potential : Potential or array
        Potential table; a bare array needs ``grid``.
    E : float
        Energy.
    direction : {"forward", "backward"}
        Forward starts at ``x_min`` with ``psi0 = psi(x_min)``,
        ``psi1 = psi(x_min + h)``; backward starts at ``x_max`` with
        ``psi0 = psi(x_max)``, ``psi1 = psi(x_max - h)``.

    Returns
    -------
    WaveTable
        Complex samples, possibly rescaled (see ``log_scale``).
    """
    if isinstance(potential, Potential):
        grid = potential.grid if grid is None else grid
        v = potential.on(grid).values
    else:
        if grid is None:
            raise InvalidParams("a bare potential array needs a grid")
        v = np.asarray(potential, dtype=float)
        if v.shape != (grid.n_points,):
            raise GridMismatch("potential table does not match grid")
    if psi0 is None or psi1 is None:
        raise InvalidParams("two starting values are required")
    f = E - v
    psi = np.zeros(grid.n_points, dtype=complex)
    n = grid.n_points
    if direction == "forward":
        psi[0], psi[1] = psi0, psi1
        log_scale = sweep(f, grid.h, psi, 0, n - 1)
    elif direction == "backward":
        psi[n - 1], psi[n - 2] = psi0, psi1
        log_scale = sweep(f, grid.h, psi, n - 1, 0)
    else:
        raise InvalidParams(f"unknown direction {direction!r}")
    return WaveTable(grid, psi, log_scale)
