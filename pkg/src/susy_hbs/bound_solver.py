"""Bound states (E < 0) of a sampled scattering potential by two-sided shooting.

For a trial energy E = -kappa**2 the left solution starts as e^{+kappa x} at
the left edge and the right solution as e^{-kappa x} at the right edge. Both
are run with Numerov to the matching point (the grid point of minimum V) and
compared through their Wronskian. The discrete Wronskian used here,

    c[m] c[m+1] (psiL[m+1] psiR[m] - psiL[m] psiR[m+1]) / h,   c = 1 + h^2 (E - V) / 12,

is exactly independent of m for the Numerov recurrence, so its zeros are
the eigenvalues of the discretised problem regardless of where the two
halves meet. It is divided by kappa and by the root-mean-square of each
half at (m, m+1), which never vanishes, so the scaled mismatch has no
poles between eigenvalues.
"""
from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DomainTooSmall, EdgeNotFlat, EnergyNonPositive, InvalidParams
from .numerov import Grid, Potential, WaveTable, sweep

logger = logging.getLogger(__name__)

EDGE_TOL = 1e-6
E_FLOOR = -1e-9
N_SCAN = 400
E_TOL = 1e-10
MAX_POINTS = 200_000
DECAY_LENGTHS = 10.0


def as_potential(potential) -> Potential:
    """Accept a Potential, a ScaledPotential, or a (grid, values) pair."""
    if isinstance(potential, Potential):
        return potential
    inner = getattr(potential, "potential", None)
    if isinstance(inner, Potential):
        return inner
    if isinstance(potential, tuple) and len(potential) == 2 and isinstance(potential[0], Grid):
        return Potential(potential[0], potential[1])
    raise InvalidParams(f"cannot interpret {type(potential).__name__} as a potential")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SUSY_HBS_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class StateDiagnostics:
    domain_used: float
    mismatch_residual: float


@dataclass
class Spectrum:
    energies: np.ndarray
    node_counts: np.ndarray
    diagnostics: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.energies)

    @property
    def empty(self) -> bool:
        return len(self.energies) == 0

    @property
    def ground(self) -> float | None:
        return float(self.energies[0]) if len(self.energies) else None

    def rows(self) -> list:
        return [
            {"index": i, "E": float(e), "nodes": int(n),
             "residual": d.mismatch_residual, "domain_used": d.domain_used}
            for i, (e, n, d) in enumerate(zip(self.energies, self.node_counts, self.diagnostics))
        ]


def count_nodes(psi, rel_floor: float = 1e-12) -> int:
    """Strict sign changes of a real wavefunction, skipping tiny samples."""
    if isinstance(psi, WaveTable):
        psi = psi.values
    psi = np.real(np.asarray(psi))
    if psi.size == 0:
        return 0
    big = psi[np.abs(psi) >= rel_floor * np.abs(psi).max()]
    s = np.sign(big)
    return int(np.count_nonzero(s[1:] != s[:-1]))


class _Shooter:
    """Shooting set-up for one potential on one grid."""

    def __init__(self, pot: Potential):
        self.pot = pot
        self.grid = pot.grid
        self.v = pot.values
        self.h = pot.grid.h
        n = pot.grid.n_points
        # keep the matching pair strictly inside the grid
        self.m = int(min(max(int(np.argmin(self.v)), 1), n - 3))

    def halves(self, E: float):
        kappa = math.sqrt(-E)
        n, m, h = self.grid.n_points, self.m, self.h
        f = E - self.v
        left = np.empty(m + 2)
        left[0], left[1] = 1.0, math.exp(kappa * h)
        sweep(f, h, left, 0, m + 1)
        right = np.empty(n)
        right[n - 1], right[n - 2] = 1.0, math.exp(kappa * h)
        sweep(f, h, right, n - 1, m)
        return kappa, f, left, right[m:]

    def mismatch(self, E: float) -> float:
        kappa, f, left, right = self.halves(E)
        m, h = self.m, self.h
        c0 = 1.0 + h * h * f[m] / 12.0
        c1 = 1.0 + h * h * f[m + 1] / 12.0
        cas = c0 * c1 * (left[m + 1] * right[0] - left[m] * right[1]) / h
        nl = math.sqrt(0.5 * (left[m] ** 2 + left[m + 1] ** 2))
        nr = math.sqrt(0.5 * (right[0] ** 2 + right[1] ** 2))
        return cas / (kappa * nl * nr)

    def wavefunction(self, E: float) -> np.ndarray:
        _, _, left, right = self.halves(E)
        m = self.m
        # join at whichever of m, m+1 has the larger right-hand value
        j = 0 if abs(right[0]) >= abs(right[1]) else 1
        ratio = left[m + j] / right[j]
        psi = np.empty(self.grid.n_points)
        psi[: m + j + 1] = left[: m + j + 1]
        psi[m + j:] = ratio * right[j:]
        return psi / np.abs(psi).max()


def mismatch(potential, E: float) -> float:
    """Scaled Wronskian mismatch at trial energy ``E`` (< 0)."""
    if not E < 0:
        raise EnergyNonPositive(f"bound-state mismatch needs E < 0, got {E:g}")
    return _Shooter(as_potential(potential)).mismatch(E)


def scan_energies(e_lo: float, e_hi: float, n: int = N_SCAN) -> np.ndarray:
    """Uniform energies on [e_lo, e_hi] merged with log-spaced ones near e_hi."""
    lin = np.linspace(e_lo, e_hi, n)
    near = -np.geomspace(-e_lo, -e_hi, max(n // 4, 2))
    return np.unique(np.concatenate([lin, near]))


def _bracket_roots(fun, energies, tol):
    with ThreadPoolExecutor(_threads()) as ex:
        vals = np.array(list(ex.map(fun, energies)))
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        roots.append((energies[i], energies[i + 1],
                      brentq(fun, energies[i], energies[i + 1], xtol=1e-4 * tol, rtol=1e-15)))
    for i in np.nonzero(vals == 0.0)[0]:
        roots.append((energies[i], energies[i], float(energies[i])))
    return roots


def extended_grid(grid: Grid, kappa: float, max_points: int = MAX_POINTS,
                  decay_lengths: float = DECAY_LENGTHS) -> Grid:
    L = max(grid.L, decay_lengths / kappa)
    h = max(grid.h, 2.0 * L / (max_points - 1))
    return Grid.with_step(-L, L, h)


def _check_domain(grid: Grid, kappa: float):
    if 1.0 / kappa > (grid.x_max - grid.x_min) / 8.0:
        raise DomainTooSmall(f"decay length {1 / kappa:.3g} exceeds an eighth of the window")


def find_bound_states(potential, e_min: float | None = None, e_floor: float = E_FLOOR,
                      n_scan: int = N_SCAN, e_tol: float = E_TOL, extend: bool = True,
                      max_points: int = MAX_POINTS, edge_tol: float = EDGE_TOL) -> Spectrum:
    """All bound states of ``potential`` between its minimum and ``e_floor``.

    Parameters
    ----------
    potential : Potential, ScaledPotential or (Grid, values)
        Must be flat (``|V| <= edge_tol``) at both grid ends.
    e_min : float, optional
        Bottom of the search window; defaults to ``min(V) + 1e-9``.
    e_floor : float
        Top of the window. Shallower states are not reported.
    extend : bool
        Re-solve states whose decay length exceeds an eighth of the window
        on a wider grid of half-width ``max(L, 10/kappa)``.

    Returns
    -------
    Spectrum
        Possibly empty; an empty spectrum is a valid answer.
    """
    pot = as_potential(potential)
    v = pot.values
    if abs(v[0]) > edge_tol or abs(v[-1]) > edge_tol:
        raise EdgeNotFlat(f"|V| at the grid ends is {max(abs(v[0]), abs(v[-1])):.3g} > {edge_tol:g}")
    vmin = float(v.min())
    e_lo = vmin + 1e-9 if e_min is None else float(e_min)
    if e_lo >= e_floor:
        return Spectrum(np.array([]), np.array([], dtype=int), [], ["potential never dips below the floor"])

    shooter = _Shooter(pot)
    brackets = _bracket_roots(shooter.mismatch, scan_energies(e_lo, e_floor, n_scan), e_tol)

    found = []
    for lo, hi, E in brackets:
        solver = shooter
        kappa = math.sqrt(-E)
        try:
            _check_domain(pot.grid, kappa)
        except DomainTooSmall as exc:
            if extend:
                big = extended_grid(pot.grid, kappa, max_points)
                logger.info("%s; re-solving on [%g, %g] with h=%g", exc, big.x_min, big.x_max, big.h)
                solver = _Shooter(pot.on(big))
                E = _refine(solver, lo, hi, E, e_tol)
            else:
                logger.warning("%s", exc)
        psi = solver.wavefunction(E)
        found.append((E, count_nodes(psi),
                      StateDiagnostics(solver.grid.x_max - solver.grid.x_min, abs(solver.mismatch(E)))))

    found.sort(key=lambda t: t[0])
    energies = np.array([t[0] for t in found])
    nodes = np.array([t[1] for t in found], dtype=int)
    notes = []
    if not found:
        notes.append(f"none found above floor {e_floor:g}")
    elif not np.array_equal(nodes, np.arange(len(nodes))):
        notes.append(f"node counts {nodes.tolist()} out of oscillation order")
    return Spectrum(energies, nodes, [t[2] for t in found], notes)


def _refine(solver: _Shooter, lo: float, hi: float, guess: float, tol: float) -> float:
    a, b = lo, hi
    fa, fb = solver.mismatch(a), solver.mismatch(b)
    width = max(hi - lo, 1e-6 * abs(guess))
    for _ in range(40):
        if fa * fb <= 0:
            break
        width *= 2.0
        a, b = guess - width, min(guess + width, -1e-12)
        fa, fb = solver.mismatch(a), solver.mismatch(b)
    else:
        logger.warning("lost the bracket on the extended grid; keeping %g", guess)
        return guess
    if fa == 0:
        return a
    if fb == 0:
        return b
    return brentq(solver.mismatch, a, b, xtol=1e-4 * tol, rtol=1e-15)
