"""Area integrals of potentials and the negative-area bound-state criterion.

A one-dimensional potential with finite first moment that encloses negative
area, ``I = int V dx < 0``, binds at least one state. Positive area gives no
such guarantee either way.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy.integrate import simpson

from .ansatz import HbsAnsatz, superpotential
from .bound_solver import as_potential
from .errors import BoundaryNotDecayed, GridMismatch
from .numerov import DEFAULT_GRID, Grid
from .partner import build_pair

SIGN_TOL = 1e-9
W_EDGE_TOL = 1e-6


class Sign(str, Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"


class Prediction(str, Enum):
    BOUND = "at_least_one_bound_state"
    NO_GUARANTEE = "no_unconditional_guarantee"


def _samples(potential, grid=None):
    if grid is not None:
        v = np.asarray(potential, dtype=float)
        if v.shape != (grid.n_points,):
            raise GridMismatch(f"{v.size} samples for a grid of {grid.n_points}")
        return grid.x, v
    pot = as_potential(potential)
    return pot.x, pot.values


def area_integral(potential, grid: Grid | None = None) -> float:
    """Composite Simpson integral of V over its grid.

    ``potential`` is a Potential (or anything ``as_potential`` takes), or a
    bare array together with ``grid``.
    """
    x, v = _samples(potential, grid)
    if x.size % 2 == 0:
        raise GridMismatch("composite Simpson needs an odd number of samples")
    return float(simpson(v, x=x))


@dataclass(frozen=True)
class AreaReport:
    I: float  # noqa: E741
    I_weighted: float
    sign: Sign
    prediction: Prediction

    def to_dict(self) -> dict:
        d = asdict(self)
        d["sign"] = self.sign.value
        d["prediction"] = self.prediction.value
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def simon_classify(potential, grid: Grid | None = None) -> AreaReport:
    """Area, windowed (1 + x^2)|V| moment, and the bound-state prediction.

    The moment is taken over the sampled window only, so it is a sanity
    indicator rather than a proof of integrability.
    """
    I = area_integral(potential, grid)  # noqa: E741
    x, v = _samples(potential, grid)
    weighted = float(simpson((1.0 + x * x) * np.abs(v), x=x))
    if I < -SIGN_TOL:
        sign = Sign.NEGATIVE
    elif I > SIGN_TOL:
        sign = Sign.POSITIVE
    else:
        sign = Sign.ZERO
    pred = Prediction.BOUND if I < 0 else Prediction.NO_GUARANTEE
    return AreaReport(I, weighted, sign, pred)


class W2Identity(NamedTuple):
    lhs_minus: float
    lhs_plus: float
    rhs: float

    @property
    def max_gap(self) -> float:
        return max(abs(self.lhs_minus - self.rhs), abs(self.lhs_plus - self.rhs),
                   abs(self.lhs_minus - self.lhs_plus))


def w2_identity(ans: HbsAnsatz, grid: Grid = DEFAULT_GRID) -> W2Identity:
    """int V- dx, int V+ dx and int W^2 dx, which agree once W(+-L) ~ 0."""
    edges = superpotential(ans, np.array([grid.x_min, grid.x_max])).w
    if np.abs(edges).max() > W_EDGE_TOL:
        raise BoundaryNotDecayed(f"|W| at the window edges is {np.abs(edges).max():.3g}")
    pair = build_pair(ans, grid)
    x = pair.x
    return W2Identity(float(simpson(pair.v_minus, x=x)), float(simpson(pair.v_plus, x=x)),
                      float(simpson(pair.w * pair.w, x=x)))
