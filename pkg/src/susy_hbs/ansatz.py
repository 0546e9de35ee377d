"""Nodeless zero-energy seed states psi*(x) = offset + F(x).

Built-in families (``w`` is the width parameter, default 1):

=========  ======================  ====================
family     F(x)                    range of F
=========  ======================  ====================
gaussian   exp(-(x/w)**2)          (0, 1]
tanh       tanh(x/w)               (-1, 1)
erf        erf(x/w)                (-1, 1)
xgauss     (x/w) exp(-(x/w)**2)    [-(2e)**-0.5, (2e)**-0.5]
constant   0                       {0}
tabulated  cubic spline of table   sampled min/max
=========  ======================  ====================
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import erf

from .errors import DivisionNearNode, InvalidParams, NodeDetected, OutOfTable
from .numerov import Grid

NODE_FLOOR = 1e-12
DEFAULT_DOMAIN = (-12.0, 12.0)

_XGAUSS_PEAK = 1.0 / math.sqrt(2.0 * math.e)
_SQRT_PI = math.sqrt(math.pi)


class Family(str, Enum):
    GAUSSIAN = "gaussian"
    TANH = "tanh"
    ERF = "erf"
    XGAUSS = "xgauss"
    CONSTANT = "constant"
    TABULATED = "tabulated"


@dataclass(frozen=True)
class Table:
    x: np.ndarray
    f: np.ndarray
    f1: Optional[np.ndarray] = None
    f2: Optional[np.ndarray] = None


@dataclass(frozen=True)
class HbsAnsatz:
    family: Family
    offset: float
    params: dict = field(default_factory=dict)
    table: Optional[Table] = field(default=None, repr=False, compare=False)
    _splines: Optional[tuple] = field(default=None, repr=False, compare=False)

    @property
    def width(self) -> float:
        return float(self.params.get("width", 1.0))

    def range_of_f(self) -> tuple[float, float, bool, bool]:
        """(lo, hi, lo_included, hi_included) for the range of F."""
        fam = self.family
        if fam is Family.GAUSSIAN:
            return 0.0, 1.0, False, True
        if fam in (Family.TANH, Family.ERF):
            return -1.0, 1.0, False, False
        if fam is Family.XGAUSS:
            return -_XGAUSS_PEAK, _XGAUSS_PEAK, True, True
        if fam is Family.CONSTANT:
            return 0.0, 0.0, True, True
        f = self.table.f
        return float(f.min()), float(f.max()), True, True

    def limits(self) -> tuple[float, float]:
        """Asymptotic values (C1, C2) of F at -inf and +inf."""
        fam = self.family
        if fam in (Family.TANH, Family.ERF):
            return -1.0, 1.0
        if fam is Family.TABULATED:
            return float(self.table.f[0]), float(self.table.f[-1])
        return 0.0, 0.0

    def to_dict(self) -> dict:
        d = {"family": self.family.value, "offset": self.offset, "params": dict(self.params)}
        if self.table is not None:
            d["table"] = {"x": self.table.x.tolist(), "f": self.table.f.tolist()}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "HbsAnsatz":
        table = d.get("table")
        if table is not None:
            table = Table(np.asarray(table["x"], float), np.asarray(table["f"], float))
        return make_ansatz(d["family"], d["offset"], d.get("params"), table=table)


def make_ansatz(family, offset: float, params: Optional[dict] = None,
                table: Optional[Table] = None) -> HbsAnsatz:
    """Build and validate a seed state ``offset + F(x)``.

    Raises
    ------
    NodeDetected
        If zero lies in the closure of the range of ``offset + F``, which
        covers both genuine nodes and seeds that vanish at infinity.
    InvalidParams
        Unknown family, non-positive width, or a malformed table.
    """
    try:
        family = Family(family.lower() if isinstance(family, str) else family)
    except ValueError:
        raise InvalidParams(f"unknown family {family!r}") from None
    params = dict(params or {})
    unknown = set(params) - {"width"}
    if unknown:
        raise InvalidParams(f"unknown parameters {sorted(unknown)}")
    width = float(params.get("width", 1.0))
    if not (width > 0 and math.isfinite(width)):
        raise InvalidParams("width must be positive")
    offset = float(offset)
    if not math.isfinite(offset):
        raise InvalidParams("offset must be finite")

    splines = None
    if family is Family.TABULATED:
        if table is None:
            raise InvalidParams("tabulated family needs a table")
        x = np.asarray(table.x, dtype=float)
        f = np.asarray(table.f, dtype=float)
        if x.ndim != 1 or x.shape != f.shape or x.size < 4:
            raise InvalidParams("table needs matching 1-D x and f with >= 4 rows")
        if np.any(np.diff(x) <= 0):
            raise InvalidParams("table x must be strictly increasing")
        table = Table(x, f, table.f1, table.f2)
        spl = CubicSpline(x, f)
        s1 = CubicSpline(x, table.f1) if table.f1 is not None else spl.derivative(1)
        if table.f2 is not None:
            s2 = CubicSpline(x, table.f2)
        elif table.f1 is not None:
            s2 = s1.derivative(1)
        else:
            s2 = spl.derivative(2)
        splines = (spl, s1, s2)
    elif table is not None:
        raise InvalidParams("table given for a built-in family")

    ans = HbsAnsatz(family, offset, params, table, splines)
    lo, hi, lo_in, hi_in = ans.range_of_f()
    # 0 in closure of range(offset + F): a node, or psi* -> 0 at infinity
    if lo + offset <= 0.0 <= hi + offset:
        raise NodeDetected(
            f"offset {offset:g} puts zero in [{lo + offset:g}, {hi + offset:g}]"
        )
    return ans


def eval_state(ans: HbsAnsatz, x):
    """Return (psi, psi', psi'') of the seed state at ``x``."""
    x = np.asarray(x, dtype=float)
    w = ans.width
    u = x / w
    fam = ans.family
    if fam is Family.GAUSSIAN:
        g = np.exp(-u * u)
        f, f1, f2 = g, -2.0 * u * g, (4.0 * u * u - 2.0) * g
    elif fam is Family.TANH:
        t = np.tanh(u)
        s = 1.0 - t * t
        f, f1, f2 = t, s, -2.0 * t * s
    elif fam is Family.ERF:
        d = 2.0 / _SQRT_PI * np.exp(-u * u)
        f, f1, f2 = erf(u), d, -2.0 * u * d
    elif fam is Family.XGAUSS:
        g = np.exp(-u * u)
        f, f1, f2 = u * g, (1.0 - 2.0 * u * u) * g, (4.0 * u ** 3 - 6.0 * u) * g
    elif fam is Family.CONSTANT:
        z = np.zeros_like(u)
        f, f1, f2 = z, z, z
    else:
        tx = ans.table.x
        if np.any(x < tx[0]) or np.any(x > tx[-1]):
            raise OutOfTable(f"x outside table range [{tx[0]:g}, {tx[-1]:g}]")
        spl, s1, s2 = ans._splines
        return ans.offset + spl(x), s1(x), s2(x)
    return ans.offset + f, f1 / w, f2 / (w * w)


class SuperpotentialSample(NamedTuple):
    x: np.ndarray
    w: np.ndarray
    w_prime: np.ndarray


def superpotential(ans: HbsAnsatz, x, floor: float = NODE_FLOOR) -> SuperpotentialSample:
    """W = -psi'/psi and W' = -psi''/psi + (psi'/psi)**2, analytically."""
    x = np.asarray(x, dtype=float)
    p, p1, p2 = eval_state(ans, x)
    if np.any(np.abs(p) < floor):
        raise DivisionNearNode(f"|psi*| below {floor:g}")
    r = p1 / p
    return SuperpotentialSample(x, -r, -p2 / p + r * r)


class NodeReport(NamedTuple):
    node_count: int
    nodes: list
    min_abs_psi: float


def validate_nodeless(ans: HbsAnsatz, domain=DEFAULT_DOMAIN, n_samples: int = 4801) -> NodeReport:
    """Count zero crossings of psi* on ``domain``.

    Unlike ``make_ansatz`` this reports rather than raises, and works for
    any ansatz object, including ones built without validation.
    """
    from scipy.optimize import brentq

    a, b = domain
    if ans.family is Family.TABULATED:
        a, b = max(a, ans.table.x[0]), min(b, ans.table.x[-1])
    xs = np.linspace(a, b, n_samples)
    psi = eval_state(ans, xs)[0]
    fun = lambda t: float(eval_state(ans, t)[0])  # noqa: E731
    nodes = []
    for i in np.nonzero(np.sign(psi[:-1]) * np.sign(psi[1:]) < 0)[0]:
        nodes.append(brentq(fun, xs[i], xs[i + 1], xtol=1e-14))
    # exact zeros on samples
    for i in np.nonzero(psi[1:-1] == 0.0)[0] + 1:
        if psi[i - 1] * psi[i + 1] < 0:
            nodes.append(float(xs[i]))
    return NodeReport(len(nodes), sorted(nodes), float(np.abs(psi).min()))


def unchecked_ansatz(family, offset: float, params: Optional[dict] = None) -> HbsAnsatz:
    """Build an ansatz without the nodelessness check (for diagnostics)."""
    return HbsAnsatz(Family(family), float(offset), dict(params or {}))


def grid_for(ans: HbsAnsatz, grid: Grid) -> Grid:
    if ans.family is Family.TABULATED:
        tx = ans.table.x
        if grid.x_min < tx[0] or grid.x_max > tx[-1]:
            raise OutOfTable("grid extends beyond the table")
    return grid
