"""Dirac-delta arrays: the zero-energy triple-delta solution and bound states.

A delta of strength ``U`` at ``x0`` contributes ``-U delta(x - x0)`` to the
potential, so ``U > 0`` is a well. With psi'' + (E - V) psi = 0 the
derivative jumps by ``psi'(x0+) - psi'(x0-) = -U psi(x0)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import brentq

from .bound_solver import Spectrum, StateDiagnostics, count_nodes
from .errors import ConstraintPole, InvalidParams

KAPPA_MIN = 1e-5
N_KAPPA = 400
KAPPA_TOL = 1e-12


@dataclass(frozen=True)
class DeltaArray:
    positions: tuple
    strengths: tuple

    def __post_init__(self):
        pos = tuple(float(p) for p in self.positions)
        st = tuple(float(u) for u in self.strengths)
        if not pos or len(pos) != len(st):
            raise InvalidParams("need at least one delta and matching strengths")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise InvalidParams("delta positions must be strictly increasing")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "strengths", st)

    @classmethod
    def from_records(cls, records: Sequence[dict]) -> "DeltaArray":
        recs = sorted(records, key=lambda r: float(r["position"]))
        return cls([r["position"] for r in recs], [r["strength"] for r in recs])

    def to_records(self) -> list:
        return [{"position": p, "strength": u} for p, u in zip(self.positions, self.strengths)]

    @classmethod
    def triple(cls, u1: float, u2: float, a: float = 1.0) -> "DeltaArray":
        return cls((-a, 0.0, a), (u1, u2, u1))


@dataclass(frozen=True)
class DeltaHbs:
    """Piecewise-linear zero-energy state of the symmetric triple delta.

    psi = A for x < -a, B x + C on [-a, 0), D x + F on [0, a), A for x >= a.
    """

    u1: float
    u2: float
    a: float
    A: float
    B: float
    C: float
    D: float
    F: float

    @property
    def array(self) -> DeltaArray:
        return DeltaArray.triple(self.u1, self.u2, self.a)

    @property
    def node_count(self) -> int:
        return hbs_nodes(self)

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("u1", "u2", "a", "A", "B", "C", "D", "F")}
        d["node_count"] = self.node_count
        d["case"] = classify_case(self.u1, self.a).label
        return d


def central_strength(u1: float, a: float) -> float:
    """U2 = 2 U1 / (U1 a - 1), the condition for a zero-energy Neumann state."""
    den = u1 * a - 1.0
    if den == 0.0:
        raise ConstraintPole(f"u1*a = 1 (u1={u1:g}, a={a:g})")
    return 2.0 * u1 / den


def solve_hbs(u1: float, a: float = 1.0) -> DeltaHbs:
    if not a > 0:
        raise InvalidParams("a must be positive")
    u1 = float(u1)
    a = float(a)
    u2 = central_strength(u1, a)
    A = 1.0
    B = -u1 * A
    C = (1.0 - u1 * a) * A
    D = -(u1 + u2 - u1 * u2 * a) * A
    return DeltaHbs(u1, u2, a, A, B, C, D, C)


def eval_delta_hbs(hbs: DeltaHbs, x):
    x = np.asarray(x, dtype=float)
    a = hbs.a
    return np.select(
        [x < -a, x < 0.0, x < a],
        [hbs.A, hbs.B * x + hbs.C, hbs.D * x + hbs.F],
        default=hbs.A,
    )


def hbs_nodes(hbs: DeltaHbs) -> int:
    # psi is linear between the breakpoints and constant outside, so sign
    # changes among the breakpoint values are exactly the nodes
    vals = [hbs.A, hbs.C, hbs.A]
    vals = [v for v in vals if v != 0.0]
    return int(sum(1 for p, q in zip(vals, vals[1:]) if p * q < 0))


def jump_residuals(hbs: DeltaHbs) -> np.ndarray:
    """Continuity and derivative-jump residuals at -a, 0, a (all zero ideally)."""
    a = hbs.a
    psi_m = hbs.B * -a + hbs.C
    psi_0 = hbs.F
    psi_a = hbs.D * a + hbs.F
    return np.array([
        hbs.A - psi_m,
        hbs.C - psi_0,
        psi_a - hbs.A,
        hbs.B + hbs.u1 * psi_m,
        (hbs.D - hbs.B) + hbs.u2 * psi_0,
        -hbs.D + hbs.u1 * psi_a,
    ])


class CaseLabel(NamedTuple):
    label: str
    node_count: int
    description: str


def classify_case(u1: float, a: float = 1.0) -> CaseLabel:
    """Which of the three triple-delta configurations (u1, a) produces."""
    p = u1 * a
    if p == 1.0:
        raise ConstraintPole(f"u1*a = 1 (u1={u1:g}, a={a:g})")
    if p > 1.0:
        return CaseLabel("i", 2, "three wells; HBS with two nodes")
    if p > 0.0:
        return CaseLabel("ii", 0, "wells at +-a, barrier at 0; nodeless HBS")
    if p < 0.0:
        return CaseLabel("iii", 0, "barriers at +-a, well at 0; nodeless HBS")
    raise InvalidParams("u1 = 0 leaves no potential")


def _coefficients(array: DeltaArray, kappa: float):
    # psi = a e^{k(x - x0)} + b e^{-k(x - x0)}, x0 the first delta; start a=1, b=0
    x0 = array.positions[0]
    a, b = 1.0, 0.0
    for xj, u in zip(array.positions, array.strengths):
        s = kappa * (xj - x0)
        ep, em = math.exp(s), math.exp(-s)
        jump = -u * (a * ep + b * em)
        a += jump * em / (2.0 * kappa)
        b -= jump * ep / (2.0 * kappa)
    return a, b


def growing_coefficient(array: DeltaArray, kappa: float) -> float:
    """Coefficient of e^{+kappa x} on the far right; zero at a bound state."""
    a, b = _coefficients(array, kappa)
    # positive rescale keeps the sign and tames large kappa * span
    span = array.positions[-1] - array.positions[0]
    return a * math.exp(-kappa * span) if span > 0 else a


def _wavefunction(array: DeltaArray, kappa: float, x: np.ndarray) -> np.ndarray:
    x0 = array.positions[0]
    psi = np.exp(kappa * (x - x0))
    a, b = 1.0, 0.0
    last = len(array.positions) - 1
    for j, (xj, u) in enumerate(zip(array.positions, array.strengths)):
        s = kappa * (xj - x0)
        jump = -u * (a * math.exp(s) + b * math.exp(-s))
        a += jump * math.exp(-s) / (2.0 * kappa)
        b -= jump * math.exp(s) / (2.0 * kappa)
        if j == last:
            a = 0.0  # the bound-state condition; drop the round-off remainder
        right = x >= xj
        psi[right] = a * np.exp(kappa * (x[right] - x0)) + b * np.exp(-kappa * (x[right] - x0))
    return psi


def delta_bound_states(array: DeltaArray, e_lo: float | None = None, eps: float = 1e-9,
                       n_kappa: int = N_KAPPA) -> Spectrum:
    """All bound states of a delta array by transfer-matrix root finding in kappa."""
    if e_lo is None:
        wells = sum(u for u in array.strengths if u > 0)
        e_lo = -(0.5 * wells + 1.0) ** 2
    k_hi = math.sqrt(-e_lo)
    k_lo = max(KAPPA_MIN, math.sqrt(eps))
    ks = np.geomspace(k_lo, k_hi, n_kappa)
    vals = np.array([growing_coefficient(array, k) for k in ks])
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        roots.append(brentq(lambda k: growing_coefficient(array, k), ks[i], ks[i + 1],
                            xtol=KAPPA_TOL, rtol=4 * np.finfo(float).eps))
    for i in np.nonzero(vals == 0.0)[0]:
        roots.append(float(ks[i]))
    notes = [] if roots else ["NoBracket: no sign change in the kappa window"]
    roots = sorted(set(roots), reverse=True)
    energies = np.array([-k * k for k in roots])
    nodes, diags = [], []
    for k in roots:
        lo, hi = array.positions[0] - 10.0 / k, array.positions[-1] + 10.0 / k
        x = np.linspace(lo, hi, 20001)
        nodes.append(count_nodes(_wavefunction(array, k, x)))
        diags.append(StateDiagnostics(hi - lo, abs(growing_coefficient(array, k))))
    return Spectrum(energies, np.array(nodes, dtype=int), diags, notes)
