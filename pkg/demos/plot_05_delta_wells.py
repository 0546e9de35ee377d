"""
Three delta wells with a zero-energy state
==========================================

V = -U1 d(x+a) - U2 d(x) - U1 d(x-a) holds a flat-ended zero-energy state
when U2 = 2 U1/(U1 a - 1). Its node count equals the number of bound
states.
"""
import numpy as np

from susy_hbs.delta_model import classify_case, delta_bound_states, hbs_nodes, solve_hbs

for u1 in (2.0, 0.5, -2.0):
    hbs = solve_hbs(u1, a=1.0)
    spec = delta_bound_states(hbs.array)
    case = classify_case(u1, 1.0)
    print(f"U1={u1:+.1f} U2={hbs.u2:+.4f}  case ({case.label})  {hbs_nodes(hbs)} nodes  "
          f"bound states {np.round(spec.energies, 5).tolist()}")
