"""Supersymmetric partner potentials V-/+ = W**2 -/+ W' built from a seed state."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .ansatz import HbsAnsatz, eval_state, grid_for, make_ansatz, superpotential
from .errors import DomainError, InvalidParams, NodeDetected, NonPositiveScale
from .numerov import DEFAULT_GRID, Grid, Potential

SIDES = ("minus", "plus")


def _side(side: str) -> str:
    s = {"-": "minus", "+": "plus", "v-": "minus", "v+": "plus"}.get(side.lower(), side.lower())
    if s not in SIDES:
        raise InvalidParams(f"side must be 'minus' or 'plus', got {side!r}")
    return s


def partner_function(ans: HbsAnsatz, side: str):
    """Vectorised callable x -> V_side(x) evaluated analytically."""
    sign = -1.0 if _side(side) == "minus" else 1.0

    def v(x):
        s = superpotential(ans, x)
        return s.w * s.w + sign * s.w_prime

    return v


@dataclass(frozen=True)
class PartnerPair:
    grid: Grid
    w: np.ndarray
    w_prime: np.ndarray
    v_minus: np.ndarray
    v_plus: np.ndarray
    ansatz: HbsAnsatz = field(repr=False)

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    def values(self, side: str) -> np.ndarray:
        return self.v_minus if _side(side) == "minus" else self.v_plus

    def potential(self, side: str) -> Potential:
        side = _side(side)
        label = f"V{'-' if side == 'minus' else '+'}[{self.ansatz.family.value} A={self.ansatz.offset:g}]"
        return Potential(self.grid, self.values(side), partner_function(self.ansatz, side), label)

    def columns(self) -> dict:
        return {"x": self.x, "W": self.w, "Wprime": self.w_prime,
                "Vminus": self.v_minus, "Vplus": self.v_plus}


def build_pair(ans: HbsAnsatz, grid: Grid = DEFAULT_GRID) -> PartnerPair:
    """Sample W, W' and both partners on ``grid``.

    The ansatz must already be nodeless (``make_ansatz`` enforces this).
    """
    grid = grid_for(ans, grid)
    s = superpotential(ans, grid.x)
    w2 = s.w * s.w
    v_minus = w2 - s.w_prime
    v_plus = w2 + s.w_prime
    # constructed, so this is a rounding-level identity
    tol = 1e-14 * max(1.0, w2.max(), np.abs(s.w_prime).max())
    assert np.abs(v_plus - v_minus - 2.0 * s.w_prime).max() <= tol
    for arr in (s.w, s.w_prime, v_minus, v_plus):
        arr.flags.writeable = False
    return PartnerPair(grid, s.w, s.w_prime, v_minus, v_plus, ans)


def zero_energy_residual(pair: PartnerPair) -> float:
    """max |psi*'' - V- psi*| / max |psi*''| over the grid."""
    p, _, p2 = eval_state(pair.ansatz, pair.x)
    scale = np.abs(p2).max()
    if scale == 0.0:
        return float(np.abs(pair.v_minus * p).max())
    return float(np.abs(p2 - pair.v_minus * p).max() / scale)


def tanh_closed_form(offset: float, x):
    """Closed-form partners for psi* = offset + tanh(x).

    V+ = 2 sech^2 x (1 + A tanh x) / (A + tanh x)^2
    V- = -2 sech^2 x tanh x / (A + tanh x)
    """
    A = float(offset)
    if abs(A) <= 1.0:
        raise NodeDetected(f"|offset| must exceed 1 for the tanh seed, got {A:g}")
    x = np.asarray(x, dtype=float)
    t = np.tanh(x)
    sech2 = 1.0 - t * t
    v_plus = 2.0 * sech2 * (1.0 + A * t) / (A + t) ** 2
    v_minus = -2.0 * sech2 * t / (A + t)
    return v_minus, v_plus


def mirror_point(offset: float) -> float:
    """g = log((A - 1)/(A + 1)) / 2, with V+(g - x) = V-(x) for the tanh seed."""
    A = float(offset)
    if abs(A) <= 1.0:
        raise DomainError(f"mirror point needs |offset| > 1, got {A:g}")
    if math.isinf(A):
        return 0.0
    return 0.5 * math.log((A - 1.0) / (A + 1.0))


def mirror_residual(pair: PartnerPair, g: float | None = None) -> float:
    """max over grid x of |V+(g - x) - V-(x)|, V+ spline-interpolated.

    Only points with g - x inside the grid contribute.
    """
    from scipy.interpolate import CubicSpline

    if g is None:
        g = mirror_point(pair.ansatz.offset)
    x = pair.x
    xr = g - x
    inside = (xr >= x[0]) & (xr <= x[-1])
    vp = CubicSpline(x, pair.v_plus)(xr[inside])
    return float(np.abs(vp - pair.v_minus[inside]).max())


@dataclass(frozen=True)
class ScaledPotential:
    side: str
    c: float
    values: np.ndarray
    potential: Potential = field(repr=False)


def scale(pair: PartnerPair, side: str, c: float) -> ScaledPotential:
    """c * V_side for c > 0."""
    c = float(c)
    if not c > 0:
        raise NonPositiveScale(f"scale factor must be positive, got {c:g}")
    pot = c * pair.potential(side)
    return ScaledPotential(_side(side), c, pot.values, pot)


def gaussian_pair(offset: float, grid: Grid = DEFAULT_GRID) -> PartnerPair:
    return build_pair(make_ansatz("gaussian", offset), grid)
