"""Supersymmetric partner potentials from nodeless half bound states.

A nodeless zero-energy seed psi*(x) = A + F(x) gives the superpotential
W = -psi*'/psi* and partners V-/+ = W**2 -/+ W'. The package builds these
pairs, finds their bound states and scattering coefficients, integrates
their area, and solves the triple Dirac-delta example analytically.
"""
from .ansatz import HbsAnsatz, eval_state, make_ansatz, superpotential, validate_nodeless
from .area import AreaReport, area_integral, simon_classify, w2_identity
from .bound_solver import Spectrum, count_nodes, find_bound_states, mismatch
from .delta_model import (DeltaArray, DeltaHbs, classify_case, delta_bound_states,
                          eval_delta_hbs, solve_hbs)
from .errors import HbsError
from .numerov import DEFAULT_GRID, Grid, Potential, WaveTable, integrate
from .partner import PartnerPair, build_pair, mirror_point, scale, tanh_closed_form
from .scattering import ScatteringCurve, find_r_minima, rt_coefficients, scan

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_GRID", "AreaReport", "DeltaArray", "DeltaHbs", "Grid", "HbsAnsatz", "HbsError",
    "PartnerPair", "Potential", "ScatteringCurve", "Spectrum", "WaveTable", "area_integral",
    "build_pair", "classify_case", "count_nodes", "delta_bound_states", "eval_delta_hbs",
    "eval_state", "find_bound_states", "find_r_minima", "integrate", "make_ansatz", "mirror_point",
    "mismatch", "rt_coefficients", "scale", "scan", "simon_classify", "solve_hbs",
    "superpotential", "tanh_closed_form", "validate_nodeless", "w2_identity",
]
